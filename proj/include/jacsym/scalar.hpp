#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace jacsym {

/// Exact rational numbers, canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// Element of the field Q(i, sqrt2), stored on the basis 1, i, sqrt2, i*sqrt2.
///
/// The representation is unique because the four basis elements are linearly
/// independent over Q. Every constant matrix in the symmetry conjugations
/// (T = (1/2)sqrt2 (I + i I^r), complex coefficients, Kronecker factors)
/// lives in this field.
class Scalar {
public:
    Scalar() : a_(0), b_(0), c_(0), d_(0) {}
    Scalar(long v) : a_(v), b_(0), c_(0), d_(0) {}
    Scalar(const Rational& v) : a_(v), b_(0), c_(0), d_(0) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar i() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
    static Scalar i_sqrt2() { return Scalar(0, 0, 0, 1); }
    static Scalar from_string(const std::string& s);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_real() const { return b_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    /// Rational value; requires is_rational().
    const Rational& rational_value() const;

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Complex conjugation i -> -i; fixes exactly the real subfield Q(sqrt2).
    Scalar conj() const { return Scalar(a_, -b_, c_, -d_); }

    /// The other tower automorphism, sqrt2 -> -sqrt2.
    Scalar sqrt2_conj() const { return Scalar(a_, b_, -c_, -d_); }

    /// Exact inverse, rationalized through the Galois conjugates.
    /// Throws std::domain_error on zero.
    Scalar inv() const;

    std::string to_string() const;

private:
    Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace jacsym

#pragma once

#include "jacsym/scalar.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacsym {

/// Exponent vector; its length equals the ambient variable count.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then lex on exponents.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Raised when an intermediate result exceeds JACSYM_MAX_TERMS.
struct TermLimitError : std::runtime_error {
    explicit TermLimitError(std::size_t n);
};

/// Current term cap (env JACSYM_MAX_TERMS, default 10^6).
std::size_t term_limit();

/// Sparse multivariate polynomial over Scalar with a fixed arity.
/// No zero coefficients are stored, so representation is canonical.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    explicit Poly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("negative arity");
    }

    static Poly zero(int arity) { return Poly(arity); }
    static Poly constant(int arity, const Scalar& v);
    static Poly variable(int arity, int index);  // 0-based
    static Poly term(int arity, const Scalar& coeff, const Monomial& m);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Set of total degrees of the terms; empty for zero.
    std::set<int> degrees() const;

    Scalar coeff(const Monomial& m) const;
    /// Coefficient of a degree-0 or degree-1 monomial by shortcut.
    Scalar constant_term() const;

    void add_term(const Monomial& m, const Scalar& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly operator*(const Scalar& s) const;

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.arity_ == y.arity_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    /// Formal partial derivative with respect to variable `index` (0-based).
    Poly diff(int index) const;

    /// Substitute images[i] for variable i. All images must share one arity,
    /// which becomes the arity of the result. Ring homomorphism.
    Poly subst(const std::vector<Poly>& images) const;

    /// Same, dropping every term of total degree > max_degree along the way.
    Poly subst_truncated(const std::vector<Poly>& images, int max_degree) const;

    /// Drop all terms of total degree > max_degree.
    Poly truncated(int max_degree) const;
    /// Keep only terms of total degree exactly d.
    Poly homogeneous_part(int d) const;

    /// Exact division; throws std::domain_error if the division is not exact.
    friend Poly divexact(const Poly& num, const Poly& den);

    std::string to_string() const;

private:
    void check_arity(const Poly& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// All monomials of the given arity whose total degree lies in `degrees`,
/// listed in grlex order.
std::vector<Monomial> monomials_of_degrees(int arity, const std::set<int>& degrees);

}  // namespace jacsym

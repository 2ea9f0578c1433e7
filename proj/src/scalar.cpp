#include "jacsym/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jacsym {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Scalar Scalar::from_string(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw std::invalid_argument("scalar literal must have four '|'-separated parts: " + s);
    return Scalar(rational_from_string(parts[0]), rational_from_string(parts[1]),
                  rational_from_string(parts[2]), rational_from_string(parts[3]));
}

const Rational& Scalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
    return a_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    // Fast path: both operands rational.
    if (x.is_rational() && y.is_rational()) return Scalar(Rational(x.a_ * y.a_));
    // Basis products: i*i = -1, sqrt2*sqrt2 = 2, i*sqrt2 = i sqrt2,
    // sqrt2 * i sqrt2 = 2i, i * i sqrt2 = -sqrt2, (i sqrt2)^2 = -2.
    Rational a = x.a_ * y.a_ - x.b_ * y.b_ + 2 * x.c_ * y.c_ - 2 * x.d_ * y.d_;
    Rational b = x.a_ * y.b_ + x.b_ * y.a_ + 2 * x.c_ * y.d_ + 2 * x.d_ * y.c_;
    Rational c = x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_;
    Rational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return Scalar(std::move(a), std::move(b), std::move(c), std::move(d));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (is_rational()) return Scalar(Rational(1 / a_));
    // x * conj_i(x) * conj_s(x) * conj_is(x) is the field norm, a rational.
    Scalar prod = conj() * sqrt2_conj() * conj().sqrt2_conj();
    Scalar norm = *this * prod;
    if (!norm.is_rational() || norm.a_ == 0)
        throw std::logic_error("tower norm is not a nonzero rational");
    Rational n = 1 / norm.a_;
    return Scalar(prod.a_ * n, prod.b_ * n, prod.c_ * n, prod.d_ * n);
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    os << rational_to_string(a_) << '|' << rational_to_string(b_) << '|'
       << rational_to_string(c_) << '|' << rational_to_string(d_);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

}  // namespace jacsym

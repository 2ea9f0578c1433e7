#include "jacsym/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace jacsym {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& x, const Monomial& y) const {
    int dx = monomial_degree(x), dy = monomial_degree(y);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

TermLimitError::TermLimitError(std::size_t n)
    : std::runtime_error("term count " + std::to_string(n) +
                         " exceeds JACSYM_MAX_TERMS, aborting") {}

std::size_t term_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("JACSYM_MAX_TERMS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return limit;
}

namespace {
void enforce_limit(std::size_t n) {
    if (n > term_limit()) throw TermLimitError(n);
}
}  // namespace

Poly Poly::constant(int arity, const Scalar& v) {
    Poly p(arity);
    if (!v.is_zero()) p.terms_.emplace(Monomial(arity, 0), v);
    return p;
}

Poly Poly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::out_of_range("variable index out of range");
    Monomial m(arity, 0);
    m[index] = 1;
    Poly p(arity);
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
}

Poly Poly::term(int arity, const Scalar& coeff, const Monomial& m) {
    if (static_cast<int>(m.size()) != arity)
        throw std::invalid_argument("monomial length does not match arity");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("negative exponent");
    Poly p(arity);
    if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

std::set<int> Poly::degrees() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) out.insert(monomial_degree(m));
    return out;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const {
    return coeff(Monomial(arity_, 0));
}

void Poly::add_term(const Monomial& m, const Scalar& coeff) {
    if (static_cast<int>(m.size()) != arity_)
        throw std::invalid_argument("monomial length does not match arity");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    enforce_limit(terms_.size());
}

Poly Poly::operator-() const {
    Poly out(arity_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    x.check_arity(y);
    Poly out(x.arity_);
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            Monomial m(x.arity_);
            for (int i = 0; i < x.arity_; ++i) m[i] = mx[i] + my[i];
            out.add_term(m, cx * cy);
        }
    }
    return out;
}

Poly Poly::operator*(const Scalar& s) const {
    Poly out(arity_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

Poly Poly::diff(int index) const {
    if (index < 0 || index >= arity_) throw std::out_of_range("diff index out of range");
    Poly out(arity_);
    for (const auto& [m, c] : terms_) {
        if (m[index] == 0) continue;
        Monomial dm = m;
        dm[index] -= 1;
        out.add_term(dm, c * Scalar(m[index]));
    }
    return out;
}

namespace {

Poly subst_impl(const Poly& p, const std::vector<Poly>& images, int max_degree) {
    if (static_cast<int>(images.size()) != p.arity())
        throw std::invalid_argument("substitution image count does not match arity");
    int out_arity = images.empty() ? 0 : images[0].arity();
    for (const auto& img : images)
        if (img.arity() != out_arity) throw std::invalid_argument("substitution images mix arities");

    // Cache successive powers of each image.
    std::vector<std::vector<Poly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Poly::constant(out_arity, Scalar(1)));

    auto power = [&](std::size_t i, int e) -> const Poly& {
        while (static_cast<int>(powers[i].size()) <= e) {
            Poly next = powers[i].back() * images[i];
            if (max_degree >= 0) next = next.truncated(max_degree);
            powers[i].push_back(std::move(next));
        }
        return powers[i][e];
    };

    Poly out(out_arity);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(out_arity, c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (m[i] == 0) continue;
            t = t * power(i, m[i]);
            if (max_degree >= 0) t = t.truncated(max_degree);
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

}  // namespace

Poly Poly::subst(const std::vector<Poly>& images) const {
    return subst_impl(*this, images, -1);
}

Poly Poly::subst_truncated(const std::vector<Poly>& images, int max_degree) const {
    return subst_impl(*this, images, max_degree);
}

Poly Poly::truncated(int max_degree) const {
    Poly out(arity_);
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) <= max_degree) out.terms_.emplace(m, c);
    }
    return out;
}

Poly Poly::homogeneous_part(int d) const {
    Poly out(arity_);
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) == d) out.terms_.emplace(m, c);
    }
    return out;
}

Poly divexact(const Poly& num, const Poly& den) {
    num.check_arity(den);
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(num.arity());
    Poly r = num;
    const auto& dlt = *den.terms_.rbegin();  // grlex leading term
    while (!r.is_zero()) {
        const auto& rlt = *r.terms_.rbegin();
        Monomial m(num.arity());
        for (int i = 0; i < num.arity(); ++i) {
            m[i] = rlt.first[i] - dlt.first[i];
            if (m[i] < 0) throw std::domain_error("polynomial division is not exact");
        }
        Scalar c = rlt.second / dlt.second;
        Poly t = Poly::term(num.arity(), c, m);
        q += t;
        r -= t * den;
    }
    return q;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second << ")";
        for (int i = 0; i < arity_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*x" << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

namespace {
void collect_monomials(int arity, int pos, int remaining, Monomial& cur,
                       std::vector<Monomial>& out) {
    if (pos == arity - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        collect_monomials(arity, pos + 1, remaining - e, cur, out);
    }
}
}  // namespace

std::vector<Monomial> monomials_of_degrees(int arity, const std::set<int>& degrees) {
    std::vector<Monomial> out;
    if (arity == 0) return out;
    for (int d : degrees) {
        if (d < 0) continue;
        Monomial cur(arity, 0);
        collect_monomials(arity, 0, d, cur, out);
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

}  // namespace jacsym

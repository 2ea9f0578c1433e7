#include "jacsym/polymap.hpp"

#include "jacsym/linalg.hpp"

#include <stdexcept>

namespace jacsym {

PolyMap::PolyMap(int n_in, std::vector<Poly> components)
    : n_in_(n_in), components_(std::move(components)) {
    if (n_in <= 0) throw std::invalid_argument("map needs a positive input arity");
    for (const auto& p : components_)
        if (p.arity() != n_in) throw std::invalid_argument("component arity differs from n_in");
    if (components_.empty()) throw std::invalid_argument("map needs at least one component");
}

PolyMap PolyMap::identity(int n) {
    std::vector<Poly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(Poly::variable(n, i));
    return PolyMap(n, std::move(comps));
}

PolyMap PolyMap::reversed_identity(int n) {
    std::vector<Poly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(Poly::variable(n, n - 1 - i));
    return PolyMap(n, std::move(comps));
}

PolyMap PolyMap::zero(int n_in, int n_out) {
    return PolyMap(n_in, std::vector<Poly>(n_out, Poly::zero(n_in)));
}

bool PolyMap::is_zero() const {
    for (const auto& p : components_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMap::has_identity_linear_part() const {
    if (!is_square()) return false;
    for (int i = 0; i < n_out(); ++i) {
        if (components_[i].homogeneous_part(1) != Poly::variable(n_in_, i)) return false;
    }
    return true;
}

std::set<int> PolyMap::degrees() const {
    std::set<int> out;
    for (const auto& p : components_) {
        auto d = p.degrees();
        out.insert(d.begin(), d.end());
    }
    return out;
}

PolyMap PolyMap::operator-() const {
    std::vector<Poly> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(-p);
    return PolyMap(n_in_, std::move(comps));
}

PolyMap operator+(const PolyMap& x, const PolyMap& y) {
    if (x.n_in_ != y.n_in_ || x.n_out() != y.n_out())
        throw std::invalid_argument("map shape mismatch in sum");
    std::vector<Poly> comps;
    comps.reserve(x.components_.size());
    for (int i = 0; i < x.n_out(); ++i) comps.push_back(x.components_[i] + y.components_[i]);
    return PolyMap(x.n_in_, std::move(comps));
}

PolyMap operator-(const PolyMap& x, const PolyMap& y) {
    return x + (-y);
}

PolyMap PolyMap::operator*(const Scalar& s) const {
    std::vector<Poly> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(p * s);
    return PolyMap(n_in_, std::move(comps));
}

PolyMap PolyMap::minus_identity() const {
    if (!is_square()) throw std::invalid_argument("F - x needs a square map");
    return *this - identity(n_in_);
}

PolyMap PolyMap::plus_identity() const {
    if (!is_square()) throw std::invalid_argument("x + H needs a square map");
    return *this + identity(n_in_);
}

PolyMatrix::PolyMatrix(int rows, int cols, int arity)
    : rows_(rows), cols_(cols), arity_(arity),
      entries_(static_cast<std::size_t>(rows) * cols, Poly::zero(arity)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix needs positive shape");
}

PolyMatrix PolyMatrix::identity(int n, int arity) {
    PolyMatrix m(n, n, arity);
    for (int i = 0; i < n; ++i) m.set(i, i, Poly::constant(arity, Scalar(1)));
    return m;
}

void PolyMatrix::set(int r, int c, Poly p) {
    if (p.arity() != arity_) throw std::invalid_argument("entry arity differs from matrix arity");
    entries_.at(index(r, c)) = std::move(p);
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    PolyMatrix out(x.rows_, x.cols_, x.arity_);
    for (int r = 0; r < x.rows_; ++r)
        for (int c = 0; c < x.cols_; ++c) out.set(r, c, x.at(r, c) + y.at(r, c));
    return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch in difference");
    PolyMatrix out(x.rows_, x.cols_, x.arity_);
    for (int r = 0; r < x.rows_; ++r)
        for (int c = 0; c < x.cols_; ++c) out.set(r, c, x.at(r, c) - y.at(r, c));
    return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    PolyMatrix out(x.rows_, y.cols_, x.arity_);
    for (int r = 0; r < x.rows_; ++r) {
        for (int c = 0; c < y.cols_; ++c) {
            Poly acc = Poly::zero(x.arity_);
            for (int k = 0; k < x.cols_; ++k) acc += x.at(r, k) * y.at(k, c);
            out.set(r, c, std::move(acc));
        }
    }
    return out;
}

PolyMatrix PolyMatrix::reversed_rows() const {
    PolyMatrix out(rows_, cols_, arity_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(rows_ - 1 - r, c));
    return out;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix out(cols_, rows_, arity_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

PolyMatrix PolyMatrix::anti_transposed() const {
    if (!is_square()) throw std::invalid_argument("anti-transpose needs a square matrix");
    PolyMatrix out(rows_, cols_, arity_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(rows_ - 1 - c, cols_ - 1 - r, at(r, c));
    return out;
}

PolyMap PolyMatrix::apply(const PolyMap& h) const {
    if (h.n_out() != cols_) throw std::invalid_argument("matrix-map shape mismatch");
    std::vector<Poly> comps;
    comps.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        Poly acc = Poly::zero(h.n_in());
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * h.component(c);
        comps.push_back(std::move(acc));
    }
    return PolyMap(h.n_in(), std::move(comps));
}

ScalarMatrix::ScalarMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix needs positive shape");
}

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

ScalarMatrix ScalarMatrix::reversed_identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, Scalar(1));
    return m;
}

ScalarMatrix ScalarMatrix::j_block(int half) {
    ScalarMatrix m(2 * half, 2 * half);
    for (int i = 0; i < half; ++i) m.set(i, i, Scalar(-1));
    for (int i = half; i < 2 * half; ++i) m.set(i, i, Scalar(1));
    return m;
}

ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    ScalarMatrix out(x.rows_, x.cols_);
    for (int r = 0; r < x.rows_; ++r)
        for (int c = 0; c < x.cols_; ++c) out.set(r, c, x.at(r, c) + y.at(r, c));
    return out;
}

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    ScalarMatrix out(x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r) {
        for (int c = 0; c < y.cols_; ++c) {
            Scalar acc;
            for (int k = 0; k < x.cols_; ++k) acc += x.at(r, k) * y.at(k, c);
            out.set(r, c, std::move(acc));
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::operator*(const Scalar& s) const {
    ScalarMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c) * s);
    return out;
}

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

ScalarMatrix ScalarMatrix::kronecker(const ScalarMatrix& o) const {
    ScalarMatrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (int r2 = 0; r2 < o.rows_; ++r2)
                for (int c2 = 0; c2 < o.cols_; ++c2)
                    out.set(r * o.rows_ + r2, c * o.cols_ + c2, at(r, c) * o.at(r2, c2));
    return out;
}

PolyMap ScalarMatrix::as_linear_map() const {
    std::vector<Poly> comps;
    comps.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        Poly acc = Poly::zero(cols_);
        for (int c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero()) acc += Poly::variable(cols_, c) * at(r, c);
        }
        comps.push_back(std::move(acc));
    }
    return PolyMap(cols_, std::move(comps));
}

PolyMap ScalarMatrix::apply(const PolyMap& h) const {
    if (h.n_out() != cols_) throw std::invalid_argument("matrix-map shape mismatch");
    std::vector<Poly> comps;
    comps.reserve(rows_);
    for (int r = 0; r < rows_; ++r) {
        Poly acc = Poly::zero(h.n_in());
        for (int c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero()) acc += h.component(c) * at(r, c);
        }
        comps.push_back(std::move(acc));
    }
    return PolyMap(h.n_in(), std::move(comps));
}

PolyMatrix jacobian(const PolyMap& h) {
    PolyMatrix out(h.n_out(), h.n_in(), h.n_in());
    for (int r = 0; r < h.n_out(); ++r)
        for (int c = 0; c < h.n_in(); ++c) out.set(r, c, h.component(r).diff(c));
    return out;
}

std::pair<PolyMap, PolyMatrix> gradient_hessian(const Poly& f) {
    std::vector<Poly> comps;
    comps.reserve(f.arity());
    for (int i = 0; i < f.arity(); ++i) comps.push_back(f.diff(i));
    PolyMap grad(f.arity(), std::move(comps));
    PolyMatrix hess = jacobian(grad);
    return {std::move(grad), std::move(hess)};
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    if (g.n_out() != f.n_in())
        throw std::invalid_argument("composition arity mismatch: n_out(G) != n_in(F)");
    std::vector<Poly> comps;
    comps.reserve(f.n_out());
    for (int i = 0; i < f.n_out(); ++i) comps.push_back(f.component(i).subst(g.components()));
    return PolyMap(g.n_in(), std::move(comps));
}

PolyMap linear_conjugate(const PolyMap& f, const ScalarMatrix& t) {
    if (!f.is_square()) throw std::invalid_argument("conjugation needs a square map");
    if (!t.is_square() || t.rows() != f.n_in())
        throw std::invalid_argument("conjugation matrix size mismatch");
    ScalarMatrix tinv = inverse(t);  // throws std::domain_error when singular
    return tinv.apply(compose(f, t.as_linear_map()));
}

PolyMap reverse_map(const PolyMap& f) {
    std::vector<Poly> comps(f.components().rbegin(), f.components().rend());
    return PolyMap(f.n_in(), std::move(comps));
}

int default_inverse_degree(const PolyMap& f) {
    int deg = 1;
    for (const auto& p : f.components()) deg = std::max(deg, p.degree());
    long bound = 1;
    for (int i = 1; i < f.n_in(); ++i) {
        bound *= deg;
        if (bound > (1 << 20)) return 1 << 20;
    }
    return static_cast<int>(bound);
}

FormalInverse formal_inverse(const PolyMap& f, int max_degree) {
    if (!f.is_square()) throw std::invalid_argument("formal inverse needs a square map");
    if (!f.has_identity_linear_part())
        throw std::invalid_argument("formal inverse needs linear part x");
    PolyMap h = f.minus_identity();
    for (const auto& p : h.components()) {
        auto degs = p.degrees();
        if (!degs.empty() && *degs.begin() < 2)
            throw std::invalid_argument("formal inverse needs every term of H of degree >= 2");
    }
    int n = f.n_in();
    PolyMap g = PolyMap::identity(n);
    for (int iter = 0; iter <= max_degree + 1; ++iter) {
        std::vector<Poly> comps;
        comps.reserve(n);
        for (int i = 0; i < n; ++i)
            comps.push_back(Poly::variable(n, i) -
                            h.component(i).subst_truncated(g.components(), max_degree));
        PolyMap next(n, std::move(comps));
        if (next == g) break;
        g = std::move(next);
    }
    bool exact = compose(f, g) == PolyMap::identity(n);
    return {std::move(g), exact};
}

KellerFlags keller_nilpotency(const PolyMap& f) {
    if (!f.is_square()) throw std::invalid_argument("keller check needs a square map");
    int n = f.n_in();
    PolyMatrix jf = jacobian(f);
    Poly det = determinant(jf);
    bool keller = !det.is_zero() && det.degree() == 0;

    PolyMatrix jh = jacobian(f.minus_identity());
    bool nilpotent = true;

    // Fast negative certificate: a single rational point where (JH(p))^n != 0
    // proves non-nilpotency exactly.
    auto eval_at = [&](long salt) {
        ScalarMatrix m(n, n);
        std::vector<Poly> point;
        point.reserve(n);
        for (int i = 0; i < n; ++i) {
            Rational v(2 * i + 2 + salt, 2 * i + 1);
            point.push_back(Poly::constant(n, Scalar(v)));
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m.set(r, c, jh.at(r, c).subst(point).constant_term());
        return m;
    };
    for (long salt : {0L, 5L}) {
        ScalarMatrix m = eval_at(salt);
        ScalarMatrix p = m;
        for (int k = 1; k < n; ++k) p = p * m;
        bool zero = true;
        for (int r = 0; r < n && zero; ++r)
            for (int c = 0; c < n && zero; ++c)
                if (!p.at(r, c).is_zero()) zero = false;
        if (!zero) {
            nilpotent = false;
            break;
        }
    }
    if (nilpotent) {
        PolyMatrix p = jh;
        for (int k = 1; k < n && !p.is_zero(); ++k) p = p * jh;
        nilpotent = p.is_zero();
    }
    return {keller, nilpotent};
}

bool quasi_translation_check(const PolyMap& h) {
    if (!h.is_square()) throw std::invalid_argument("quasi-translation check needs n_out = n_in");
    PolyMap jh_h = jacobian(h).apply(h);
    if (!jh_h.is_zero()) return false;
    PolyMap f = h.plus_identity();
    PolyMap g = PolyMap::identity(h.n_in()) - h;
    if (compose(f, g) != PolyMap::identity(h.n_in()))
        throw std::logic_error("JH*H = 0 but x - H is not the inverse of x + H");
    return true;
}

PolyMap substitute_zero_tail(const PolyMap& f, int count) {
    int n = f.n_in();
    if (count < 0 || count > n) throw std::invalid_argument("bad zero-tail count");
    int keep = n - count;
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 0; i < keep; ++i) images.push_back(Poly::variable(keep, i));
    for (int i = keep; i < n; ++i) images.push_back(Poly::zero(keep));
    std::vector<Poly> comps;
    comps.reserve(f.n_out());
    for (const auto& p : f.components()) comps.push_back(p.subst(images));
    return PolyMap(keep, std::move(comps));
}

PolyMap hadamard_power_of_linear(const ScalarMatrix& m, int d) {
    if (d < 1) throw std::invalid_argument("componentwise power needs d >= 1");
    PolyMap lin = m.as_linear_map();
    std::vector<Poly> comps;
    comps.reserve(lin.n_out());
    for (const auto& p : lin.components()) {
        Poly acc = Poly::constant(lin.n_in(), Scalar(1));
        for (int k = 0; k < d; ++k) acc = acc * p;
        comps.push_back(std::move(acc));
    }
    return PolyMap(lin.n_in(), std::move(comps));
}

}  // namespace jacsym

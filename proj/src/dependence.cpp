#include "jacsym/dependence.hpp"

#include "jacsym/linalg.hpp"

#include <map>
#include <stdexcept>

namespace jacsym {

std::vector<DependenceWitness> solve_dependence(const PolyMap& h) {
    if (!h.is_square()) throw std::invalid_argument("solve_dependence needs a square map");
    int n = h.n_in();
    PolyMatrix jh = jacobian(h);

    // One equation per (column, monomial): sum_i lambda_i coeff(JH[i][j], mu) = 0.
    std::vector<SparseRow> rows;
    for (int j = 0; j < n; ++j) {
        std::map<Monomial, SparseRow, GrlexLess> per_mono;
        for (int i = 0; i < n; ++i) {
            for (const auto& [m, c] : jh.at(i, j).terms()) per_mono[m].entries.emplace_back(i, c);
        }
        for (auto& [m, row] : per_mono) rows.push_back(std::move(row));
    }
    NullspaceResult ns = nullspace(n, rows);

    std::vector<DependenceWitness> out;
    for (const auto& lambda : ns.basis) {
        // Re-verify by exact polynomial arithmetic.
        for (int j = 0; j < n; ++j) {
            Poly acc = Poly::zero(n);
            for (int i = 0; i < n; ++i) acc += jh.at(i, j) * lambda[i];
            if (!acc.is_zero())
                throw std::logic_error("dependence witness fails exact verification");
        }
        Poly combo = Poly::zero(n);
        for (int i = 0; i < n; ++i) combo += h.component(i) * lambda[i];
        if (combo.degree() > 0)
            throw std::logic_error("dependence witness combination is not constant");
        out.push_back({lambda, combo.constant_term()});
    }
    return out;
}

namespace {

Rational rational_coeff(const Scalar& s) {
    if (!s.is_rational())
        throw std::invalid_argument("operation is defined over Q; coefficient "
                                    "has an irrational part");
    return s.rational_value();
}

void require_rational(const Poly& p) {
    for (const auto& [m, c] : p.terms()) rational_coeff(c);
}

}  // namespace

Poly planar_hessian_reconstruct(const PlanarHessianForm& form) {
    Poly t = Poly::variable(2, 0) * Scalar(form.a) - Poly::variable(2, 1) * Scalar(form.b);
    Poly out = form.g.subst({t});
    out += Poly::variable(2, 0) * Scalar(form.c);
    out -= Poly::variable(2, 1) * Scalar(form.d);
    return out;
}

PlanarHessianForm planar_hessian_decompose(const Poly& h) {
    if (h.arity() != 2) throw std::invalid_argument("planar decomposition needs two variables");
    require_rational(h);
    auto [grad, hess] = gradient_hessian(h);
    Poly det = hess.at(0, 0) * hess.at(1, 1) - hess.at(0, 1) * hess.at(1, 0);
    if (!det.is_zero())
        throw std::domain_error("planar decomposition needs det Hess h = 0");

    PlanarHessianForm form{Poly::zero(1), 0, 0, 0, 0};
    form.c = rational_coeff(h.coeff({1, 0}));
    form.d = -rational_coeff(h.coeff({0, 1}));

    if (hess.is_zero()) return form;  // rank 0: h is affine up to the dropped constant

    // Hess h = g''(a x1 - b x2) * [[a^2, -ab], [-ab, b^2]]; read the direction
    // off the leading coefficients and verify the proportionality exactly.
    const Poly& h11 = hess.at(0, 0);
    const Poly& h12 = hess.at(0, 1);
    const Poly& h22 = hess.at(1, 1);
    Rational ratio;  // b / a when a != 0
    bool a_zero = h11.is_zero();
    if (!a_zero) {
        if (h12.is_zero()) {
            ratio = 0;
        } else {
            const auto& lead11 = *h11.terms().rbegin();
            Scalar c12 = h12.coeff(lead11.first);
            ratio = -rational_coeff(c12 / lead11.second);
        }
        if (h12 != h11 * Scalar(-ratio) || h22 != h11 * Scalar(ratio * ratio))
            throw std::logic_error("Hessian is singular but not of rank-one direction form");
        mpz_class p = ratio.get_num(), q = ratio.get_den();
        form.a = Rational(q);
        form.b = Rational(p);
    } else {
        if (!h12.is_zero())
            throw std::logic_error("Hessian is singular but not of rank-one direction form");
        form.a = 0;
        form.b = 1;
    }

    // Recover g from the degree >= 2 part of h along the direction line.
    Poly h2plus(2);
    for (const auto& [m, c] : h.terms())
        if (monomial_degree(m) >= 2) h2plus.add_term(m, c);

    Poly g(1);
    if (form.a != 0) {
        // x1 = u / a, x2 = 0 makes t = u.
        Poly u_scaled = Poly::variable(1, 0) * Scalar(Rational(1) / form.a);
        g = h2plus.subst({u_scaled, Poly::zero(1)});
    } else {
        // direction (0, 1): t = -x2, so substitute x2 = -u.
        g = h2plus.subst({Poly::zero(1), -Poly::variable(1, 0)});
    }

    PlanarHessianForm candidate{g, form.a, form.b, form.c, form.d};
    Poly rebuilt = planar_hessian_reconstruct(candidate);
    Poly target = h - Poly::constant(2, h.constant_term());
    if (rebuilt != target)
        throw std::logic_error("planar decomposition failed to reconstruct the input");
    return candidate;
}

PolyMap nred_pad(const PolyMap& h, int d, Regime regime) {
    if (!h.is_square()) throw std::invalid_argument("nred_pad needs a square map");
    if (d < 1) throw std::invalid_argument("nred_pad needs d >= 1");
    int n = h.n_in();
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) images.push_back(Poly::variable(n + 1, i));
    std::vector<Poly> comps;
    comps.reserve(n + 1);
    for (const auto& p : h.components()) comps.push_back(p.subst(images));

    Monomial mono(n + 1, 0);
    if (regime == Regime::none) {
        mono[n] = d;  // h = x_{n+1}^d
    } else {
        // det JH = 0 (or nilpotent): pick the smallest i with e_i^t outside
        // the row space of JH over K(x).
        PolyMatrix jh = jacobian(h);
        int chosen = -1;
        for (int i = 0; i < n; ++i) {
            ScalarVector e(n, Scalar(0));
            e[i] = Scalar(1);
            if (!row_in_row_space(jh, e)) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0)
            throw std::domain_error("nred_pad: JH has full row space; is det JH = 0?");
        mono[chosen] = d;
    }
    comps.push_back(Poly::term(n + 1, Scalar(1), mono));
    return PolyMap(n + 1, std::move(comps));
}

}  // namespace jacsym

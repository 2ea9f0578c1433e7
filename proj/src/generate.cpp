#include "jacsym/generate.hpp"

#include "jacsym/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacsym {

namespace {

Poly random_poly_impl(Rng& rng, int arity, const std::set<int>& degrees, int max_terms,
                      bool gauss) {
    auto monos = monomials_of_degrees(arity, degrees);
    if (monos.empty()) return Poly::zero(arity);
    int want = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(max_terms)));
    Poly p(arity);
    for (int k = 0; k < want; ++k) {
        const Monomial& m = monos[rng.below(monos.size())];
        Scalar c = gauss ? rng.nonzero_gauss() : Scalar(rng.nonzero_rational());
        p.add_term(m, c);
    }
    if (p.is_zero() && !monos.empty()) {
        p.add_term(monos[rng.below(monos.size())],
                   gauss ? rng.nonzero_gauss() : Scalar(rng.nonzero_rational()));
    }
    return p;
}

std::set<int> shifted_up(const std::set<int>& degrees) {
    std::set<int> out;
    for (int d : degrees) out.insert(d + 1);
    return out;
}

PolyMap gradient_of(const Poly& f) {
    return gradient_hessian(f).first;
}

}  // namespace

Poly random_poly(Rng& rng, int arity, const std::set<int>& degrees, int max_terms) {
    return random_poly_impl(rng, arity, degrees, max_terms, false);
}

Poly random_gauss_poly(Rng& rng, int arity, const std::set<int>& degrees, int max_terms) {
    return random_poly_impl(rng, arity, degrees, max_terms, true);
}

PolyMap random_h(Rng& rng, int n, const std::set<int>& degrees, int max_terms) {
    std::vector<Poly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(random_poly(rng, n, degrees, max_terms));
    return PolyMap(n, std::move(comps));
}

PolyMap random_triangular_h(Rng& rng, int n, const std::set<int>& degrees, int max_terms) {
    std::vector<Poly> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i == n - 1) {
            comps.push_back(Poly::zero(n));
            continue;
        }
        // Build in the tail variables only, then lift.
        int tail = n - 1 - i;
        Poly q = random_poly(rng, tail, degrees, max_terms);
        std::vector<Poly> images;
        images.reserve(tail);
        for (int v = 0; v < tail; ++v) images.push_back(Poly::variable(n, i + 1 + v));
        comps.push_back(q.subst(images));
    }
    return PolyMap(n, std::move(comps));
}

namespace {

// H_i = g_i(x_1 - x_N, x_2 - x_{N-1}, ...) with H^r = H: the horizontal
// symmetric, vertical antisymmetric quasi-translation family.
PolyMap half_space_havjc(Rng& rng, int n, const std::set<int>& degrees, int max_terms) {
    int m = n / 2;
    std::vector<Poly> diffs;
    diffs.reserve(m);
    for (int j = 0; j < m; ++j)
        diffs.push_back(Poly::variable(n, j) - Poly::variable(n, n - 1 - j));
    std::vector<Poly> comps(n, Poly::zero(n));
    int head = (n + 1) / 2;
    for (int i = 0; i < head; ++i) {
        Poly g = m == 0 ? Poly::zero(1) : random_poly(rng, m, degrees, max_terms);
        Poly h = m == 0 ? Poly::zero(n) : g.subst(diffs);
        comps[i] = h;
        comps[n - 1 - i] = std::move(h);
    }
    return PolyMap(n, std::move(comps));
}

// H_i = g_i(x_1 + x_N, ..., x_mid) with H^r = -H and zero middle component.
PolyMap half_space_ahvjc(Rng& rng, int n, const std::set<int>& degrees, int max_terms) {
    int m = n / 2;
    bool odd = (n % 2 == 1);
    std::vector<Poly> sums;
    for (int j = 0; j < m; ++j)
        sums.push_back(Poly::variable(n, j) + Poly::variable(n, n - 1 - j));
    if (odd) sums.push_back(Poly::variable(n, m));
    std::vector<Poly> comps(n, Poly::zero(n));
    for (int i = 0; i < m; ++i) {
        Poly g = sums.empty() ? Poly::zero(1)
                              : random_poly(rng, static_cast<int>(sums.size()), degrees, max_terms);
        Poly h = sums.empty() ? Poly::zero(n) : g.subst(sums);
        comps[i] = h;
        comps[n - 1 - i] = -h;
    }
    return PolyMap(n, std::move(comps));
}

PolyMap random_identity_map(Rng& rng, int n, const std::set<int>& degrees, int max_terms) {
    return random_h(rng, n, degrees, max_terms).plus_identity();
}

PolyMap sample_from_space(const InstanceSpec& spec, Rng& rng) {
    PatternSpace space = pattern_space(spec);
    if (space.dimension == 0) {
        int max_deg = spec.degree_set.empty() ? 0 : *spec.degree_set.rbegin();
        if (max_deg >= 2)
            throw std::domain_error("generate_instance: pattern space is zero — the class has no "
                                    "instance with these term degrees");
        return PolyMap::zero(spec.n_vars, spec.n_vars);
    }
    PolyMap h = PolyMap::zero(spec.n_vars, spec.n_vars);
    bool nonzero = false;
    for (const auto& basis_map : space.basis) {
        Rational c = rng.rational(4, 3);
        if (c != 0) nonzero = true;
        h = h + basis_map * Scalar(c);
    }
    if (!nonzero) h = h + space.basis.front();
    return h;
}

}  // namespace

PolyMap generate_instance(const InstanceSpec& spec, std::uint64_t seed) {
    if (spec.regime != Regime::none)
        throw std::invalid_argument("generate_instance supports regime none only");
    if (spec.degree_set.empty()) throw std::invalid_argument("empty degree set");
    if (spec.pattern.dimension != spec.n_vars)
        throw std::invalid_argument("pattern dimension must equal n_vars");
    int n = spec.n_vars;
    Rng rng = Rng::child(seed, 0x6a63u);
    const std::string name = spec.pattern.name.value_or("");
    const int max_terms = 3;

    if (name == "sjc") {
        return gradient_of(random_poly(rng, n, shifted_up(spec.degree_set), 2 * max_terms));
    }
    if (name == "rsjc") {
        return reverse_map(
            gradient_of(random_poly(rng, n, shifted_up(spec.degree_set), 2 * max_terms)));
    }
    if (name == "dsjc") {
        // sigma-twisted gradient; for odd n the potential omits the middle
        // variable, so the middle row and column vanish.
        bool odd = (n % 2 == 1);
        int mid = n / 2;
        auto monos = monomials_of_degrees(n, shifted_up(spec.degree_set));
        if (odd)
            std::erase_if(monos, [&](const Monomial& m) { return m[mid] != 0; });
        Poly f(n);
        for (int k = 0; k < 2 * max_terms && !monos.empty(); ++k)
            f.add_term(monos[rng.below(monos.size())], Scalar(rng.nonzero_rational()));
        PolyMap grad = gradient_of(f);
        std::vector<Poly> comps;
        comps.reserve(n);
        for (int i = 0; i < n; ++i) {
            bool negate = 2 * (i + 1) <= n;
            comps.push_back(negate ? -grad.component(i) : grad.component(i));
        }
        return PolyMap(n, std::move(comps));
    }
    if ((name == "djc" || name == "hvjc" || name == "ahavjc") && n >= 2) {
        bool odd = (n % 2 == 1);
        int half = n / 2;
        PolyMap ff = name == "ahavjc"
                         ? PolyMap::identity(half + (odd ? 1 : 0))
                         : random_identity_map(rng, half + (odd ? 1 : 0), spec.degree_set,
                                               max_terms);
        PolyMap ftilde = name == "hvjc"
                             ? PolyMap::identity(half)
                             : random_identity_map(rng, half, spec.degree_set, max_terms);
        return djc_pair(ff, ftilde, odd).minus_identity();
    }
    if (name == "cjc" && n >= 2) {
        bool odd = (n % 2 == 1);
        int half = (odd ? n - 1 : n) / 2;
        std::vector<Poly> comps;
        comps.reserve(half);
        for (int i = 0; i < half; ++i)
            comps.push_back(random_gauss_poly(rng, half, spec.degree_set, max_terms));
        PolyMap complex_h(half, std::move(comps));
        PolyMap real = realify(complex_h.plus_identity());
        if (odd) real = dsjc_stabilize(real, StabilizeDirection::embed);
        return real.minus_identity();
    }
    if (name == "havjc") return half_space_havjc(rng, n, spec.degree_set, max_terms);
    if (name == "ahvjc") return half_space_ahvjc(rng, n, spec.degree_set, max_terms);
    if (name == "havsjc" || name == "ahvsjc") {
        // Adding the diagonal symmetry to the mixed-sign flip pair forces
        // every Jacobian cell to zero, so the zero map is the only instance.
        return PolyMap::zero(n, n);
    }
    return sample_from_space(spec, rng);
}

}  // namespace jacsym

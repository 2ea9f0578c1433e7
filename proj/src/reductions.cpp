#include "jacsym/reductions.hpp"

#include "jacsym/linalg.hpp"

#include <stdexcept>

namespace jacsym {

namespace {

Poly lift_front(const Poly& p, int new_arity) {
    // Embed K[x_1..x_n] into K[x_1..x_m], m >= n, keeping variable positions.
    std::vector<Poly> images;
    images.reserve(p.arity());
    for (int i = 0; i < p.arity(); ++i) images.push_back(Poly::variable(new_arity, i));
    return p.subst(images);
}

void require_identity_linear_part(const PolyMap& f, const char* who) {
    if (!f.has_identity_linear_part())
        throw std::invalid_argument(std::string(who) + " needs a map with identity linear part");
}

}  // namespace

PolyMap meng_extend(const PolyMap& f) {
    if (!f.is_square()) throw std::invalid_argument("meng_extend needs a square map");
    int n = f.n_in();
    int big = 2 * n;
    // g(x, y) = f(x, y^r) for f = y^t F, i.e. sum_j y_j F_{n-j+1}(x).
    Poly g = Poly::zero(big);
    for (int j = 0; j < n; ++j)
        g += Poly::variable(big, n + j) * lift_front(f.component(n - 1 - j), big);
    std::vector<Poly> comps;
    comps.reserve(big);
    for (int k = 0; k < n; ++k) comps.push_back(g.diff(big - 1 - k));   // d/dy_{n-k}
    for (int m = 0; m < n; ++m) comps.push_back(g.diff(n - 1 - m));     // d/dx_{n-m}
    return PolyMap(big, std::move(comps));
}

ScalarMatrix hessequiv_matrix(int n) {
    Scalar half_sqrt2(Rational(0), Rational(0), Rational(1, 2), Rational(0));
    Scalar half_i_sqrt2(Rational(0), Rational(0), Rational(0), Rational(1, 2));
    ScalarMatrix t(n, n);
    for (int i = 0; i < n; ++i) {
        t.set(i, i, t.at(i, i) + half_sqrt2);
        t.set(i, n - 1 - i, t.at(i, n - 1 - i) + half_i_sqrt2);
    }
    return t;
}

PolyMap sjc_rsjc_conj(const PolyMap& f) {
    if (!f.is_square()) throw std::invalid_argument("sjc_rsjc_conj needs a square map");
    return linear_conjugate(f, hessequiv_matrix(f.n_in()));
}

ScalarMatrix rsjc_dsjc_matrix(int half) {
    int n = 2 * half;
    ScalarMatrix t(n, n);
    for (int i = 0; i < half; ++i) {
        t.set(i, i, Scalar(1));
        t.set(i, half + (half - 1 - i), Scalar(1));
        t.set(half + i, half - 1 - i, Scalar(-1));
        t.set(half + i, half + i, Scalar(1));
    }
    return t;
}

PolyMap rsjc_dsjc_conj(const PolyMap& f, RsjcDsjcDirection direction) {
    if (!f.is_square() || f.n_in() % 2 != 0)
        throw std::invalid_argument("rsjc_dsjc_conj needs an even-dimensional square map");
    ScalarMatrix t = rsjc_dsjc_matrix(f.n_in() / 2);
    if (direction == RsjcDsjcDirection::to_rsjc) t = inverse(t);
    return linear_conjugate(f, t);
}

PolyMap dsjc_stabilize(const PolyMap& f, StabilizeDirection direction) {
    if (!f.is_square()) throw std::invalid_argument("stabilization needs a square map");
    int n = f.n_in();
    if (direction == StabilizeDirection::embed) {
        if (n % 2 != 0)
            throw std::invalid_argument("embed needs an even-dimensional instance");
        int half = n / 2;
        std::vector<Poly> images;
        images.reserve(n);
        for (int i = 0; i < half; ++i) images.push_back(Poly::variable(n + 1, i));
        for (int i = half; i < n; ++i) images.push_back(Poly::variable(n + 1, i + 1));
        std::vector<Poly> comps;
        comps.reserve(n + 1);
        for (int i = 0; i < half; ++i) comps.push_back(f.component(i).subst(images));
        comps.push_back(Poly::variable(n + 1, half));
        for (int i = half; i < n; ++i) comps.push_back(f.component(i).subst(images));
        return PolyMap(n + 1, std::move(comps));
    }
    if (n % 2 != 1) throw std::invalid_argument("project needs an odd-dimensional instance");
    int mid = n / 2;
    if (f.component(mid) != Poly::variable(n, mid))
        throw std::invalid_argument("project: middle component is not the middle coordinate");
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 0; i < mid; ++i) images.push_back(Poly::variable(n - 1, i));
    images.push_back(Poly::zero(n - 1));
    for (int i = mid + 1; i < n; ++i) images.push_back(Poly::variable(n - 1, i - 1));
    std::vector<Poly> comps;
    comps.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == mid) continue;
        // Any appearance of the middle variable means the middle column of the
        // Jacobian is nonzero.
        if (!f.component(i).diff(mid).is_zero())
            throw std::invalid_argument("project: a component depends on the middle coordinate");
        comps.push_back(f.component(i).subst(images));
    }
    return PolyMap(n - 1, std::move(comps));
}

namespace {

// The reversal conjugator (x, [x_mid,] y^r) on n + middle + n coordinates.
PolyMap y_block_reversal(int n, bool odd) {
    int total = 2 * n + (odd ? 1 : 0);
    int y0 = n + (odd ? 1 : 0);
    std::vector<Poly> comps;
    comps.reserve(total);
    for (int i = 0; i < y0; ++i) comps.push_back(Poly::variable(total, i));
    for (int i = 0; i < n; ++i) comps.push_back(Poly::variable(total, total - 1 - i));
    return PolyMap(total, std::move(comps));
}

PolyMap conjugate_by_permutation(const PolyMap& f, const PolyMap& perm) {
    // perm is an involution, so conj(F, perm) = perm o F o perm.
    return compose(perm, compose(f, perm));
}

}  // namespace

PolyMap djc_pair(const PolyMap& ff, const PolyMap& ftilde, bool odd) {
    int n = ftilde.n_in();
    if (!ftilde.is_square()) throw std::invalid_argument("djc_pair: Ftilde must be square");
    int expected_ff = odd ? n + 1 : n;
    if (!ff.is_square() || ff.n_in() != expected_ff)
        throw std::invalid_argument("djc_pair: dimension mismatch between the two maps");
    require_identity_linear_part(ff, "djc_pair");
    require_identity_linear_part(ftilde, "djc_pair");

    int total = 2 * n + (odd ? 1 : 0);
    // Images for the two inputs: Ff at (x + y [, x_mid]), Ftilde at (x - y).
    std::vector<Poly> plus_images, minus_images;
    for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(total, i);
        Poly yi = Poly::variable(total, n + (odd ? 1 : 0) + i);
        plus_images.push_back(xi + yi);
        minus_images.push_back(xi - yi);
    }
    if (odd) plus_images.push_back(Poly::variable(total, n));

    std::vector<Poly> a;  // Ff(x + y [, x_mid])
    a.reserve(ff.n_out());
    for (const auto& p : ff.components()) a.push_back(p.subst(plus_images));
    std::vector<Poly> b;  // Ftilde(x - y)
    b.reserve(n);
    for (const auto& p : ftilde.components()) b.push_back(p.subst(minus_images));

    Scalar half(Rational(1, 2));
    std::vector<Poly> comps;
    comps.reserve(total);
    for (int i = 0; i < n; ++i) comps.push_back((a[i] + b[i]) * half);
    if (odd) comps.push_back(a[n]);
    for (int i = 0; i < n; ++i) comps.push_back((a[i] - b[i]) * half);
    PolyMap k(total, std::move(comps));

    return conjugate_by_permutation(k, y_block_reversal(n, odd));
}

std::pair<PolyMap, PolyMap> djc_split(const PolyMap& g, bool odd) {
    if (!g.is_square()) throw std::invalid_argument("djc_split needs a square map");
    int total = g.n_in();
    if (odd ? (total % 2 != 1) : (total % 2 != 0))
        throw std::invalid_argument("djc_split: dimension parity does not match `odd`");
    int n = total / 2;
    require_identity_linear_part(g, "djc_split");
    if (!pattern_holds(jacobian(g.minus_identity()), pattern_build("djc", total)))
        throw std::invalid_argument("djc_split: Jacobian of G - x is not centrally symmetric");

    PolyMap w = conjugate_by_permutation(g, y_block_reversal(n, odd));

    // Undo the (x + y, [x_mid,] x - y) conjugation: J = M o W o M^{-1} with
    // M the displayed block matrix and M^{-1} = diag(1/2, [1,] 1/2) M.
    int y0 = n + (odd ? 1 : 0);
    ScalarMatrix m(total, total);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, Scalar(1));
        m.set(i, y0 + i, Scalar(1));
        m.set(y0 + i, i, Scalar(1));
        m.set(y0 + i, y0 + i, Scalar(-1));
    }
    if (odd) m.set(n, n, Scalar(1));
    ScalarMatrix minv = inverse(m);
    PolyMap j = m.apply(compose(w, minv.as_linear_map()));

    // Separation: the first block lives in (x [, x_mid]), the second in y.
    for (int i = 0; i < y0; ++i)
        for (int v = y0; v < total; ++v)
            if (!j.component(i).diff(v).is_zero())
                throw std::invalid_argument("djc_split: front block is not free of the y variables");
    for (int i = y0; i < total; ++i)
        for (int v = 0; v < y0; ++v)
            if (!j.component(i).diff(v).is_zero())
                throw std::invalid_argument("djc_split: back block is not free of the x variables");

    std::vector<Poly> front_images;
    for (int i = 0; i < y0; ++i) front_images.push_back(Poly::variable(y0, i));
    for (int i = y0; i < total; ++i) front_images.push_back(Poly::zero(y0));
    std::vector<Poly> ff_comps;
    for (int i = 0; i < y0; ++i) ff_comps.push_back(j.component(i).subst(front_images));

    std::vector<Poly> back_images;
    for (int i = 0; i < y0; ++i) back_images.push_back(Poly::zero(n));
    for (int i = 0; i < n; ++i) back_images.push_back(Poly::variable(n, i));
    std::vector<Poly> ft_comps;
    for (int i = 0; i < n; ++i) ft_comps.push_back(j.component(y0 + i).subst(back_images));

    return {PolyMap(y0, std::move(ff_comps)), PolyMap(n, std::move(ft_comps))};
}

std::pair<PolyMap, PolyMap> center_decompose(const PolyMap& f) {
    if (!f.is_square()) throw std::invalid_argument("center_decompose needs a square map");
    require_identity_linear_part(f, "center_decompose");
    if (!pattern_holds(jacobian(f.minus_identity()), pattern_build("djc", f.n_in())))
        throw std::invalid_argument("center_decompose: Jacobian of F - x is not centrally symmetric");
    Scalar half(Rational(1, 2));
    PolyMap rev = reverse_map(f);
    return {(f + rev) * half, (f - rev) * half};
}

PolyMap realify(const PolyMap& f) {
    if (!f.is_square()) throw std::invalid_argument("realify needs a square map");
    require_identity_linear_part(f, "realify");
    int n = f.n_in();
    for (const auto& p : f.components())
        for (const auto& [m, c] : p.terms())
            if (c.c() != 0 || c.d() != 0)
                throw std::invalid_argument("realify needs coefficients in Q(i)");

    int big = 2 * n;
    std::vector<Poly> plus_images, minus_images;
    for (int j = 0; j < n; ++j) {
        Poly xj = Poly::variable(big, j);
        Poly yj = Poly::variable(big, n + j);
        plus_images.push_back(xj + yj * Scalar::i());
        minus_images.push_back(xj - yj * Scalar::i());
    }

    auto conj_coeffs = [](const Poly& p) {
        Poly out(p.arity());
        for (const auto& [m, c] : p.terms()) out.add_term(m, c.conj());
        return out;
    };

    Scalar half(Rational(1, 2));
    Scalar minus_half_i = Scalar(Rational(0), Rational(-1, 2), Rational(0), Rational(0));
    std::vector<Poly> comps(big, Poly::zero(big));
    for (int i = 0; i < n; ++i) {
        Poly a = f.component(i).subst(plus_images);                  // F_i(x + iy)
        Poly at = conj_coeffs(f.component(i)).subst(minus_images);   // conj(F)_i(x - iy)
        comps[i] = (a + at) * half;                                  // Re
        comps[n + i] = (a - at) * minus_half_i;                      // Im
    }
    PolyMap c(big, std::move(comps));

    // Conjugate with (x, y^r).
    PolyMap out = conjugate_by_permutation(c, y_block_reversal(n, false));
    for (const auto& p : out.components())
        for (const auto& [m, coeff] : p.terms())
            if (!coeff.is_rational())
                throw std::logic_error("realification produced a non-rational coefficient");
    return out;
}

namespace {

std::optional<Rational> rational_root(const Rational& r, int k) {
    // k-th root of a rational, k odd; exact integer root extraction on both
    // numerator and denominator.
    mpz_class num = r.get_num(), den = r.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    Rational root(negative ? -rn : rn, rd);
    root.canonicalize();
    return root;
}

}  // namespace

PowerLinearResult power_linear_even(const ScalarMatrix& a_matrix, int d, const Scalar& a,
                                    const Scalar& b) {
    if (!a_matrix.is_square()) throw std::invalid_argument("power_linear_even: A must be square");
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("power_linear_even: d must be even, >= 2");

    auto pow_scalar = [](const Scalar& base, int e) {
        Scalar out(1);
        for (int i = 0; i < e; ++i) out = out * base;
        return out;
    };
    Scalar ad = pow_scalar(a, d), bd = pow_scalar(b, d);
    Scalar r = a * bd - ad * b;
    if (r.is_zero()) throw std::domain_error("power_linear_even: a*b^d - a^d*b vanishes");

    ScalarMatrix left(2, 2);
    left.set(0, 0, a * b);
    left.set(0, 1, -(b * b));
    left.set(1, 0, a * a);
    left.set(1, 1, -(a * b));
    PowerLinearResult out{left.kronecker(a_matrix), std::nullopt};

    std::optional<Scalar> root;
    if (d == 2) {
        root = r;  // first root
    } else if (r.is_rational()) {
        if (auto rr = rational_root(r.rational_value(), d - 1)) root = Scalar(*rr);
    }
    if (root) {
        ScalarMatrix tl(2, 2);
        tl.set(0, 0, a * *root);
        tl.set(0, 1, -(b * *root));
        tl.set(1, 0, ad);
        tl.set(1, 1, -bd);
        out.t = tl.kronecker(ScalarMatrix::identity(a_matrix.rows()));
    }
    return out;
}

std::optional<std::pair<long, long>> power_linear_search_ab(int d, long bound) {
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            Scalar sa(a), sb(b);
            auto pow_scalar = [](const Scalar& base, int e) {
                Scalar out(1);
                for (int i = 0; i < e; ++i) out = out * base;
                return out;
            };
            Scalar r = sa * pow_scalar(sb, d) - pow_scalar(sa, d) * sb;
            if (r.is_zero()) continue;
            if (d == 2) return std::make_pair(a, b);
            if (rational_root(r.rational_value(), d - 1)) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

PolyMap meng_extend_dp(const PolyMap& h, int d) {
    if (!h.is_square()) throw std::invalid_argument("meng_extend_dp needs a square map");
    if (d < 2) throw std::invalid_argument("meng_extend_dp needs d >= 2");
    int n = h.n_in();
    int big = 2 * n;
    Poly g = Poly::zero(big);
    for (int j = 0; j < n; ++j)
        g += Poly::variable(big, n + j) * lift_front(h.component(n - 1 - j), big);
    std::vector<Poly> comps;
    comps.reserve(big);
    for (int i = 0; i < n; ++i) comps.push_back(lift_front(h.component(i), big));
    for (int m = 0; m < n; ++m) {
        Poly lower = g.diff(n - 1 - m);  // d/dx_{n-m}
        Monomial mono(big, 0);
        mono[n - 1 - m] = d;             // padding term x_{n-m}^d
        lower.add_term(mono, Scalar(1));
        comps.push_back(std::move(lower));
    }
    return PolyMap(big, std::move(comps));
}

ReductionReport make_report(const PolyMap& in, const PolyMap& out, bool strip_identity) {
    ReductionReport rep;
    auto h_of = [&](const PolyMap& m) {
        return strip_identity && m.is_square() && m.has_identity_linear_part()
                   ? m.minus_identity()
                   : m;
    };
    PolyMap hin = h_of(in), hout = h_of(out);
    if (hin.is_square()) rep.input_patterns = pattern_classify(jacobian(hin));
    if (hout.is_square()) rep.output_patterns = pattern_classify(jacobian(hout));
    auto f_of = [&](const PolyMap& m, const PolyMap& h) {
        return strip_identity ? m : h.plus_identity();
    };
    if (in.is_square()) rep.before = keller_nilpotency(f_of(in, hin));
    if (out.is_square()) rep.after = keller_nilpotency(f_of(out, hout));
    rep.degrees_before = hin.degrees();
    rep.degrees_after = hout.degrees();
    return rep;
}

}  // namespace jacsym

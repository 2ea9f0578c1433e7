#include "jacsym/dependence.hpp"
#include "jacsym/generate.hpp"
#include "jacsym/linalg.hpp"
#include "jacsym/rng.hpp"

#include <doctest.h>

#include <array>
#include <map>

using namespace jacsym;

namespace {

Poly x(int arity, int i) { return Poly::variable(arity, i); }

// Independent n = 2 oracle: the kernel dimension comes from scanning minors
// of the stacked coefficient matrix, not from elimination, and the basis
// vector of a rank-one system is the cross of any nonzero row.
struct KernelOracle {
    int dimension;
    std::vector<std::array<Rational, 2>> basis;
};

KernelOracle kernel_oracle_n2(const PolyMap& h) {
    PolyMatrix jh = jacobian(h);
    std::vector<std::array<Rational, 2>> rows;
    for (int j = 0; j < 2; ++j) {
        std::map<Monomial, std::array<Rational, 2>, GrlexLess> per;
        for (int i = 0; i < 2; ++i)
            for (const auto& [m, c] : jh.at(i, j).terms()) per[m][i] = c.rational_value();
        for (auto& [m, row] : per) rows.push_back(row);
    }
    int rank = 0;
    for (const auto& r : rows)
        if (r[0] != 0 || r[1] != 0) rank = 1;
    if (rank == 1) {
        for (size_t i = 0; i < rows.size() && rank == 1; ++i)
            for (size_t j = i + 1; j < rows.size() && rank == 1; ++j)
                if (rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0] != 0) rank = 2;
    }
    KernelOracle out{2 - rank, {}};
    if (rank == 0) {
        out.basis.push_back({Rational(1), Rational(0)});
        out.basis.push_back({Rational(0), Rational(1)});
    } else if (rank == 1) {
        for (const auto& r : rows) {
            if (r[0] != 0 || r[1] != 0) {
                out.basis.push_back({-r[1], r[0]});
                break;
            }
        }
    }
    return out;
}

bool in_span(const std::vector<DependenceWitness>& ws, const std::array<Rational, 2>& v) {
    // span check for <= 2 unknowns
    if (ws.empty()) return v[0] == 0 && v[1] == 0;
    if (ws.size() >= 2) return true;
    const auto& b = ws[0].lambda;
    return b[0].rational_value() * v[1] - b[1].rational_value() * v[0] == 0;
}

}  // namespace

TEST_CASE("dependence solver basics") {
    // H = (x2^2, 2 x2^2): kernel spanned by (2, -1).
    PolyMap h(2, {x(2, 1) * x(2, 1), x(2, 1) * x(2, 1) * Scalar(2)});
    auto ws = solve_dependence(h);
    REQUIRE(ws.size() == 1);
    const auto& lambda = ws[0].lambda;
    CHECK(lambda[0] * Scalar(-1) == lambda[1] * Scalar(2));
    CHECK(ws[0].certificate.is_zero());

    // H = (0, x1^2): (1, 0) is a witness.
    PolyMap h2(2, {Poly::zero(2), x(2, 0) * x(2, 0)});
    auto ws2 = solve_dependence(h2);
    REQUIRE(ws2.size() == 1);
    CHECK_FALSE(ws2[0].lambda[0].is_zero());
    CHECK(ws2[0].lambda[1].is_zero());

    // H = (x1^2, x2^2): full rank, no witness.
    PolyMap h3(2, {x(2, 0) * x(2, 0), x(2, 1) * x(2, 1)});
    CHECK(solve_dependence(h3).empty());
}

TEST_CASE("certificates are the constant combinations") {
    // H = (x1^2 + 1, x1^2): witness (1, -1), certificate 1.
    PolyMap h(2, {x(2, 0) * x(2, 0) + Poly::constant(2, Scalar(1)), x(2, 0) * x(2, 0)});
    auto ws = solve_dependence(h);
    REQUIRE(ws.size() == 1);
    Scalar scale = ws[0].lambda[0];
    CHECK(ws[0].lambda[1] == -scale);
    CHECK(ws[0].certificate == scale);
}

TEST_CASE("solver equals the minor-rank oracle on a small grid") {
    // Sub-grid of the exhaustive acceptance run.
    Rng rng(1234);
    auto monos = monomials_of_degrees(2, {1, 2});
    for (int t = 0; t < 400; ++t) {
        std::vector<Poly> comps;
        for (int i = 0; i < 2; ++i) {
            Poly p(2);
            for (const auto& m : monos) {
                long c = rng.int_in(-1, 1);
                if (c != 0) p.add_term(m, Scalar(c));
            }
            comps.push_back(std::move(p));
        }
        PolyMap h(2, std::move(comps));
        auto ws = solve_dependence(h);
        auto oracle = kernel_oracle_n2(h);
        CHECK(static_cast<int>(ws.size()) == oracle.dimension);
        for (const auto& v : oracle.basis) CHECK(in_span(ws, v));
    }
}

TEST_CASE("planar hessian decomposition frozen examples") {
    // h = (2x1 - 3x2)^3 + 5x1 - 7x2.
    Poly t = x(2, 0) * Scalar(2) - x(2, 1) * Scalar(3);
    Poly h = t * t * t + x(2, 0) * Scalar(5) - x(2, 1) * Scalar(7);
    PlanarHessianForm form = planar_hessian_decompose(h);
    CHECK(form.a == 2);
    CHECK(form.b == 3);
    CHECK(form.c == 5);
    CHECK(form.d == 7);
    Poly u = Poly::variable(1, 0);
    CHECK(form.g == u * u * u);
    CHECK(planar_hessian_reconstruct(form) == h);

    // rank-0 Hessian: h = 5 x1.
    PlanarHessianForm lin = planar_hessian_decompose(x(2, 0) * Scalar(5));
    CHECK(lin.g.is_zero());
    CHECK(lin.a == 0);
    CHECK(lin.b == 0);
    CHECK(lin.c == 5);
    CHECK(lin.d == 0);

    // h = x1 x2 has det Hess = -1.
    CHECK_THROWS_AS(planar_hessian_decompose(x(2, 0) * x(2, 1)), std::domain_error);
    CHECK_THROWS_AS(planar_hessian_decompose(Poly::variable(3, 0)), std::invalid_argument);
}

TEST_CASE("planar round trips with canonicalization") {
    Rng rng(99);
    for (int t = 0; t < 40; ++t) {
        Poly g(1);
        auto monos = monomials_of_degrees(1, {2, 3, 4, 5});
        for (int k = 0; k < 2; ++k)
            g.add_term(monos[rng.below(monos.size())], Scalar(rng.nonzero_rational(4, 3)));
        long a = rng.int_in(-4, 4), b = rng.int_in(-4, 4);
        if (a == 0 && b == 0) a = 3;
        PlanarHessianForm in{g, Rational(a), Rational(b), rng.rational(4, 2), rng.rational(4, 2)};
        Poly h = planar_hessian_reconstruct(in);
        PlanarHessianForm out = planar_hessian_decompose(h);
        CHECK(planar_hessian_reconstruct(out) == h);
        // canonical: decomposing the reconstruction is a fixpoint
        PlanarHessianForm again = planar_hessian_decompose(planar_hessian_reconstruct(out));
        CHECK(again.a == out.a);
        CHECK(again.b == out.b);
        CHECK(again.g == out.g);
    }
}

TEST_CASE("nred padding") {
    // det-zero instance: gradient of (x1 - 2 x2)^2.
    Poly t = x(2, 0) - x(2, 1) * Scalar(2);
    PolyMap h = gradient_hessian(t * t).first;
    PolyMap padded = nred_pad(h, 2, Regime::det_zero);
    CHECK(padded.n_out() == 3);
    // smallest excluded unit row is e_1 here (row space is spanned by (1, -2))
    CHECK(padded.component(2) == x(3, 0) * x(3, 0));
    CHECK(determinant(jacobian(padded)).is_zero());
    auto ws = solve_dependence(padded);
    CHECK(!ws.empty());
    for (const auto& w : ws) CHECK(w.lambda[2].is_zero());

    // regime none pads with the new variable
    PolyMap h2(2, {x(2, 0) * x(2, 0), x(2, 1) * x(2, 1)});
    PolyMap padded2 = nred_pad(h2, 3, Regime::none);
    CHECK(padded2.component(2) == x(3, 2) * x(3, 2) * x(3, 2));

    // gradient of an x2-only potential: the row space is span{(0,1)}, so the
    // smallest excluded unit row is still e_1
    Poly t2 = x(2, 1);
    PolyMap h3 = gradient_hessian(t2 * t2).first;
    PolyMap padded3 = nred_pad(h3, 2, Regime::det_zero);
    CHECK(padded3.component(2) == x(3, 0) * x(3, 0));
}

TEST_CASE("dependence preconditions") {
    PolyMap wide(2, {x(2, 0), x(2, 1), x(2, 0) * x(2, 1)});
    CHECK_THROWS_AS(solve_dependence(wide), std::invalid_argument);
    CHECK_THROWS_AS(nred_pad(wide, 2, Regime::none), std::invalid_argument);

    // irrational coefficients are outside this operation's domain
    Poly h = Poly::variable(2, 0) * Poly::variable(2, 0) * Scalar::sqrt2();
    CHECK_THROWS_AS(planar_hessian_decompose(h), std::invalid_argument);
}

TEST_CASE("nilpotent nred keeps nilpotency") {
    Rng rng(7);
    for (int t = 0; t < 8; ++t) {
        PolyMap h = random_triangular_h(rng, 3, {2}, 2);
        PolyMap padded = nred_pad(h, 2, Regime::nilpotent);
        CHECK(keller_nilpotency(padded.plus_identity()).jh_nilpotent);
    }
}

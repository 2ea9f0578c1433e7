#include "jacsym/generate.hpp"
#include "jacsym/pattern.hpp"
#include "jacsym/rng.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <array>
#include <map>

using namespace jacsym;

namespace {

Poly c(int v) { return Poly::constant(2, Scalar(v)); }

PolyMatrix matrix2(std::array<int, 4> vals) {
    PolyMatrix m(2, 2, 2);
    m.set(0, 0, c(vals[0]));
    m.set(0, 1, c(vals[1]));
    m.set(1, 0, c(vals[2]));
    m.set(1, 1, c(vals[3]));
    return m;
}

// Independent rank oracle for the pattern-space cross-check: fraction-free
// integer elimination on the dense coefficient matrix, no Scalar machinery.
int bareiss_rank(std::vector<std::vector<mpz_class>> w) {
    if (w.empty()) return 0;
    int rows = static_cast<int>(w.size()), cols = static_cast<int>(w[0].size());
    mpz_class prev = 1;
    int rank = 0, row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[row], w[pivot]);
        for (int r = row + 1; r < rows; ++r) {
            for (int cc = col + 1; cc < cols; ++cc)
                w[r][cc] = (w[row][col] * w[r][cc] - w[r][col] * w[row][cc]) / prev;
            w[r][col] = 0;
        }
        prev = w[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

// Assemble the dense integer coefficient system for a pattern the slow way.
int brute_force_space_dim(const std::string& name, int n, const std::set<int>& degrees) {
    Pattern pat = pattern_build(name, n);
    auto monos = monomials_of_degrees(n, degrees);
    int per = static_cast<int>(monos.size());
    int unknowns = n * per;
    std::map<Monomial, int, GrlexLess> index;
    for (int k = 0; k < per; ++k) index.emplace(monos[k], k);

    std::set<int> jdegs;
    for (int d : degrees)
        if (d >= 1) jdegs.insert(d - 1);
    auto jmonos = monomials_of_degrees(n, jdegs);

    std::vector<std::vector<mpz_class>> rows;
    auto coeff_into = [&](std::vector<mpz_class>& row, Cell cell, const Monomial& mu, long mult) {
        Monomial m = mu;
        m[cell.col] += 1;
        auto it = index.find(m);
        if (it != index.end()) row[cell.row * per + it->second] += mult * m[cell.col];
    };
    for (const auto& con : pat.constraints) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Cell cell{i, j};
                if (!region_contains(con.region, cell, n)) continue;
                Cell t = apply_cell_map(con.map, cell, n);
                for (int s : sign_values(con.sign, cell, n)) {
                    for (const auto& mu : jmonos) {
                        std::vector<mpz_class> row(unknowns, 0);
                        coeff_into(row, t, mu, 1);
                        coeff_into(row, cell, mu, -s);
                        bool nonzero = false;
                        for (const auto& v : row)
                            if (v != 0) nonzero = true;
                        if (nonzero) rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return unknowns - bareiss_rank(std::move(rows));
}

}  // namespace

TEST_CASE("catalog construction and holds") {
    Pattern sjc2 = pattern_build("sjc", 2);
    CHECK(pattern_holds(matrix2({1, 5, 5, 2}), sjc2));
    CHECK_FALSE(pattern_holds(matrix2({0, 2, 0, 0}), sjc2));
    CHECK(pattern_holds(PolyMatrix(2, 2, 2), sjc2));  // zero matrix
    CHECK_THROWS_AS(pattern_build("no-such", 2), std::invalid_argument);

    // rsjc fixes (0,1), (1,0) and swaps the diagonal corners.
    PolyMatrix m(2, 2, 2);
    m.set(0, 0, Poly::variable(2, 0) * Scalar(2));
    m.set(1, 0, Poly::variable(2, 1) * Scalar(2));
    m.set(1, 1, Poly::variable(2, 0) * Scalar(2));
    CHECK(pattern_holds(m, pattern_build("rsjc", 2)));
}

TEST_CASE("classification examples") {
    // zero matrix satisfies the whole catalog
    PolyMatrix zero(2, 2, 2);
    auto names = pattern_classify(zero);
    for (const auto& n : catalog_names()) CHECK(names.count(n));

    // identity
    auto id_names = pattern_classify(matrix2({1, 0, 0, 1}));
    CHECK(id_names.count("sjc"));
    CHECK(id_names.count("rsjc"));
    CHECK(id_names.count("djc"));
    CHECK(id_names.count("crjc"));
    CHECK_FALSE(id_names.count("hvsjc"));
    CHECK_FALSE(id_names.count("hvjc"));

    // constant skew matrix
    auto skew = pattern_classify(matrix2({0, 1, -1, 0}));
    CHECK(skew.count("asjc"));
    CHECK_FALSE(skew.count("sjc"));
}

TEST_CASE("forced zeros") {
    auto asjc3 = forced_zeros(pattern_build("asjc", 3));
    CHECK(asjc3 == std::set<Cell>{{0, 0}, {1, 1}, {2, 2}});

    auto dsjc3 = forced_zeros(pattern_build("dsjc", 3));
    std::set<Cell> middle;
    for (int k = 0; k < 3; ++k) {
        middle.insert({1, k});
        middle.insert({k, 1});
    }
    CHECK(dsjc3 == middle);

    auto cjc3 = forced_zeros(pattern_build("cjc", 3));
    CHECK(cjc3 == middle);

    CHECK(forced_zeros(pattern_build("sjc", 4)).empty());

    // trasjc forces nothing off the diagonal and only the odd middle on it.
    auto tra3 = forced_zeros(pattern_build("trasjc", 3));
    CHECK(tra3 == std::set<Cell>{{1, 1}});
}

TEST_CASE("forced zeros are necessary for holds") {
    Rng rng(5);
    for (const auto& name : catalog_names()) {
        for (int n = 2; n <= 4; ++n) {
            Pattern p = pattern_build(name, n);
            auto zeros = forced_zeros(p);
            // A matrix satisfying the pattern must vanish there; check on a
            // generated instance when one exists.
            InstanceSpec spec{n, {2}, p, Regime::none};
            PolyMap h = PolyMap::zero(n, n);
            try {
                h = generate_instance(spec, 11);
            } catch (const std::domain_error&) {
                continue;  // empty class at these degrees
            }
            PolyMatrix jh = jacobian(h);
            REQUIRE(pattern_holds(jh, p));
            for (const auto& cell : zeros) CHECK(jh.at(cell.row, cell.col).is_zero());
        }
    }
}

TEST_CASE("pattern space dimensions") {
    // asjc at n=2, S={2}: the antisymmetry wipes everything out.
    InstanceSpec asjc2{2, {2}, pattern_build("asjc", 2), Regime::none};
    CHECK(pattern_space(asjc2).dimension == 0);

    // sjc at n=2, S={2}: gradients of the four cubic monomials.
    InstanceSpec sjc2{2, {2}, pattern_build("sjc", 2), Regime::none};
    PatternSpace s = pattern_space(sjc2);
    CHECK(s.dimension == 4);
    for (const auto& b : s.basis) CHECK(pattern_holds(jacobian(b), sjc2.pattern));

    // rasjc at n=3, S={2,3}: cross-checked against the independent
    // integer-elimination oracle.
    InstanceSpec rasjc3{3, {2, 3}, pattern_build("rasjc", 3), Regime::none};
    CHECK(pattern_space(rasjc3).dimension == 0);
    CHECK(brute_force_space_dim("rasjc", 3, {2, 3}) == 0);

    CHECK(brute_force_space_dim("sjc", 2, {2}) == 4);
    CHECK(brute_force_space_dim("dsjc", 3, {2}) == pattern_space(InstanceSpec{
                                                        3, {2}, pattern_build("dsjc", 3),
                                                        Regime::none}).dimension);

    CHECK_THROWS_AS(pattern_space(InstanceSpec{2, {}, pattern_build("sjc", 2), Regime::none}),
                    std::invalid_argument);
}

TEST_CASE("solver agrees with the oracle across the catalog") {
    for (const auto& name : catalog_names()) {
        for (int n : {2, 3}) {
            InstanceSpec spec{n, {2}, pattern_build(name, n), Regime::none};
            CHECK(pattern_space(spec).dimension == brute_force_space_dim(name, n, {2}));
        }
    }
}

TEST_CASE("closure correctness") {
    // Adding the composite of two constraints never changes the solution set.
    Rng rng(17);
    for (const auto& name : {"dsjc", "crjc", "hvjc", "cjc", "ahavjc"}) {
        for (int n : {2, 3}) {
            Pattern p = pattern_build(name, n);
            InstanceSpec spec{n, {2}, p, Regime::none};
            int base = pattern_space(spec).dimension;
            for (const auto& c1 : p.constraints) {
                for (const auto& c2 : p.constraints) {
                    auto extra = compose_constraints(c1, c2, n);
                    CHECK(pattern_space_with_extra(spec, {extra}).dimension == base);
                }
            }
        }
    }
}

TEST_CASE("havsjc and ahvsjc close to zero") {
    for (int n : {2, 3, 4}) {
        for (const char* name : {"havsjc", "ahvsjc"}) {
            auto zeros = forced_zeros(pattern_build(name, n));
            CHECK(static_cast<int>(zeros.size()) == n * n);
        }
        CHECK(forced_zeros(pattern_build("hvsjc", n)).empty());
    }
}

TEST_CASE("rsnjc forces the quadrant") {
    auto zeros = forced_zeros(pattern_build("rsnjc", 4));
    CHECK(zeros.count({0, 2}));
    CHECK(zeros.count({0, 3}));
    CHECK(zeros.count({1, 2}));
    CHECK(zeros.count({1, 3}));
    CHECK_FALSE(zeros.count({2, 2}));
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(pattern_holds(PolyMatrix(2, 2, 2), pattern_build("sjc", 3)),
                    std::invalid_argument);
}

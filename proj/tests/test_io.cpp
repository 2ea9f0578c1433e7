#include "jacsym/generate.hpp"
#include "jacsym/io.hpp"
#include "jacsym/rng.hpp"

#include <doctest.h>

using namespace jacsym;

TEST_CASE("term encoding") {
    Poly p(2);
    p.add_term({2, 0}, Scalar(Rational(1, 2)));
    p.add_term({0, 1}, Scalar(-3));
    Json j = poly_to_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["c"] == "1/2|0|0|0");  // leading term first
    CHECK(j[0]["e"] == Json::array({2, 0}));
    CHECK(poly_from_json(j, 2) == p);
    CHECK(poly_to_json(Poly::zero(3)) == Json::array());
}

TEST_CASE("map and matrix round trips") {
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng.below(3));
        PolyMap h = random_h(rng, n, {0, 1, 2, 3}, 3);
        CHECK(map_from_json(map_to_json(h)) == h);
        PolyMatrix jh = jacobian(h);
        CHECK(matrix_from_json(matrix_to_json(jh)) == jh);
    }
}

TEST_CASE("scalar matrix round trip") {
    ScalarMatrix m(2, 3);
    m.set(0, 0, Scalar::sqrt2());
    m.set(1, 2, Scalar(Rational(-7, 3)));
    ScalarMatrix back = scalar_matrix_from_json(scalar_matrix_to_json(m));
    CHECK(back == m);
}

TEST_CASE("pattern json") {
    Pattern p = pattern_build("rsnjc", 4);
    Pattern back = pattern_from_json(pattern_to_json(p));
    CHECK(back.dimension == 4);
    CHECK(back.constraints.size() == p.constraints.size());
    CHECK(back.name == p.name);
    CHECK(forced_zeros(back) == forced_zeros(p));

    Json raw = Json::parse(R"({"dimension": 2, "constraints":
        [{"map": "transpose", "sign": "-"}]})");
    Pattern anti = pattern_from_json(raw);
    CHECK(forced_zeros(anti) == std::set<Cell>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(
        pattern_from_json(Json::parse(R"({"dimension": 2, "constraints":
            [{"map": "sideways", "sign": "+"}]})")),
        std::invalid_argument);
}

TEST_CASE("digest is stable") {
    Json j;
    j["n_in"] = 2;
    CHECK(digest(j) == digest(j));
    Json k;
    k["n_in"] = 3;
    CHECK(digest(j) != digest(k));
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS_AS(map_from_json(Json::parse(R"({"components": []})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"c": "1|0|0|0", "e": [1]}])"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"c": "1|0|0|0", "e": [-1, 0]}])"), 2),
                    std::invalid_argument);
}

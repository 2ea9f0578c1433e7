#include "jacsym/generate.hpp"
#include "jacsym/polymap.hpp"

#include <doctest.h>

using namespace jacsym;

namespace {

bool subset(const std::set<int>& small, const std::set<int>& big) {
    for (int v : small)
        if (!big.count(v)) return false;
    return true;
}

const std::vector<std::string>& generatable() {
    static const std::vector<std::string> names = {
        "sjc",  "rsjc",  "dsjc",  "djc",    "hvjc",  "ahavjc", "havjc",
        "ahvjc", "crjc", "hvsjc", "ahavsjc", "cjc",  "havsjc", "ahvsjc"};
    return names;
}

}  // namespace

TEST_CASE("catalog soundness across seeds") {
    std::set<int> degs{2, 3};
    for (const auto& name : generatable()) {
        for (int n = 2; n <= 4; ++n) {
            Pattern p = pattern_build(name, n);
            InstanceSpec spec{n, degs, p, Regime::none};
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                PolyMap h = generate_instance(spec, seed);
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(seed);
                CHECK(pattern_holds(jacobian(h), p));
                CHECK(subset(h.degrees(), degs));
            }
        }
    }
}

TEST_CASE("generation is deterministic in the seed") {
    InstanceSpec spec{3, {2, 3}, pattern_build("djc", 3), Regime::none};
    CHECK(generate_instance(spec, 9) == generate_instance(spec, 9));
    // different seeds usually differ
    bool any_different = false;
    for (std::uint64_t s = 0; s < 5; ++s)
        if (generate_instance(spec, s) != generate_instance(spec, s + 100)) any_different = true;
    CHECK(any_different);
}

TEST_CASE("sjc instances are gradients") {
    InstanceSpec spec{2, {2}, pattern_build("sjc", 2), Regime::none};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PolyMap h = generate_instance(spec, seed);
        PolyMatrix jh = jacobian(h);
        CHECK(jh == jh.transposed());
    }
}

TEST_CASE("degree-bound classes refuse to generate") {
    InstanceSpec spec{2, {2}, pattern_build("asjc", 2), Regime::none};
    CHECK_THROWS_AS(generate_instance(spec, 1), std::domain_error);
    InstanceSpec spec3{3, {2, 3}, pattern_build("rasjc", 3), Regime::none};
    CHECK_THROWS_AS(generate_instance(spec3, 1), std::domain_error);
}

TEST_CASE("havjc instances are quasi-translations") {
    for (int n = 2; n <= 4; ++n) {
        InstanceSpec spec{n, {2, 3}, pattern_build("havjc", n), Regime::none};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            PolyMap h = generate_instance(spec, seed);
            CHECK(quasi_translation_check(h));
        }
    }
}

TEST_CASE("zero classes generate the zero map") {
    InstanceSpec spec{3, {2, 3}, pattern_build("havsjc", 3), Regime::none};
    CHECK(generate_instance(spec, 3).is_zero());
}

TEST_CASE("sampled classes come from the pattern space") {
    for (const char* name : {"crjc", "hvsjc", "ahavsjc", "trasjc"}) {
        InstanceSpec spec{3, {2}, pattern_build(name, 3), Regime::none};
        PolyMap h = generate_instance(spec, 4);
        CHECK(pattern_holds(jacobian(h), spec.pattern));
    }
}

TEST_CASE("regimes are rejected") {
    InstanceSpec spec{2, {2}, pattern_build("sjc", 2), Regime::nilpotent};
    CHECK_THROWS_AS(generate_instance(spec, 1), std::invalid_argument);
    CHECK_THROWS_AS(pattern_space(spec), std::invalid_argument);
}

#include "jacsym/harness.hpp"

#include <doctest.h>

using namespace jacsym;

TEST_CASE("every registered theorem passes or skips") {
    for (const auto& id : theorem_ids()) {
        VerifyReport rep = verify_theorem(id, 10, 2026);
        CAPTURE(id);
        CHECK((rep.passed() || rep.skipped));
        if (rep.skipped) CHECK_FALSE(rep.message.empty());
    }
}

TEST_CASE("reports are byte-identical for identical inputs") {
    VerifyReport a = verify_theorem("meng", 12, 7);
    VerifyReport b = verify_theorem("meng", 12, 7);
    CHECK(a.to_json().dump() == b.to_json().dump());
    VerifyReport c = verify_theorem("meng", 12, 8);
    CHECK(a.to_json().dump() != c.to_json().dump());
}

TEST_CASE("unknown ids and bad trial counts are rejected") {
    CHECK_THROWS_AS(verify_theorem("no-such-theorem", 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("meng", 0, 1), std::invalid_argument);
}

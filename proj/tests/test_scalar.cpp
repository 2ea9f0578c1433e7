#include "jacsym/rng.hpp"
#include "jacsym/scalar.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace jacsym;

namespace {

Scalar random_scalar(Rng& rng) {
    return Scalar(rng.rational(6, 4), rng.rational(6, 4), rng.rational(6, 4), rng.rational(6, 4));
}

}  // namespace

TEST_CASE("tower multiplication identities") {
    Scalar half_sqrt2(Rational(0), Rational(0), Rational(1, 2), Rational(0));
    CHECK(half_sqrt2 * half_sqrt2 == Scalar(Rational(1, 2)));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    Scalar one_plus_i(1, 0, 0, 0);
    one_plus_i += Scalar::i();
    CHECK(one_plus_i * one_plus_i.conj() == Scalar(2));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
}

TEST_CASE("inverses") {
    CHECK(Scalar::sqrt2().inv() == Scalar(Rational(0), Rational(0), Rational(1, 2), Rational(0)));
    CHECK(Scalar::i().inv() == -Scalar::i());
    // (1 + i sqrt2)(1 - i sqrt2) = 3
    Scalar x(Rational(1), Rational(0), Rational(0), Rational(1));
    Scalar expected(Rational(1, 3), Rational(0), Rational(0), Rational(-1, 3));
    CHECK(x * x.conj() == Scalar(3));
    CHECK(x.inv() == expected);
    CHECK_THROWS_AS(Scalar().inv(), std::domain_error);
}

TEST_CASE("conjugation") {
    Scalar x(2, 3, 0, 0);
    CHECK(x.conj() == Scalar(2, -3, 0, 0));
    Scalar y(0, 0, 1, 1);  // sqrt2 + i sqrt2
    CHECK(y.conj() == Scalar(0, 0, 1, -1));
    Scalar r(Rational(5, 7));
    CHECK(r.conj() == r);
    CHECK(r.is_rational());
    CHECK(Scalar(0, 0, 3, 0).is_real());
    CHECK_FALSE(Scalar(0, 1, 0, 0).is_real());
}

TEST_CASE("field axioms on random scalars") {
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inv() == Scalar(1));
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("string round trip") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Scalar x = random_scalar(rng);
        CHECK(Scalar::from_string(x.to_string()) == x);
    }
    CHECK(Scalar::from_string("1/2|0|0|0") == Scalar(Rational(1, 2)));
    CHECK(Scalar::from_string("0|0|1|0") == Scalar::sqrt2());
    CHECK_THROWS_AS(Scalar::from_string("1|2|3"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::from_string("x|0|0|0"), std::invalid_argument);
}

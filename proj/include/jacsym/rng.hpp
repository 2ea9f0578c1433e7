#pragma once

#include "jacsym/scalar.hpp"

#include <cstdint>

namespace jacsym {

/// Deterministic splitmix64 stream. Used everywhere randomness is needed so
/// that (seed, trial) reproduces the same instance on every platform; the
/// standard <random> distributions are implementation-defined and would not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Integer in [lo, hi] inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Rational with |numerator| <= max_num, 1 <= denominator <= max_den.
    Rational rational(long max_num = 8, long max_den = 8) {
        Rational r(int_in(-max_num, max_num), int_in(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long max_num = 8, long max_den = 8) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    /// Nonzero element of Q(i) (for realification inputs).
    Scalar nonzero_gauss() {
        for (;;) {
            Scalar s(rational(), rational(), 0, 0);
            if (!s.is_zero()) return s;
        }
    }

    /// Derive an independent child stream, e.g. per trial index.
    static Rng child(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace jacsym

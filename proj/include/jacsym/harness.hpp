#pragma once

#include "jacsym/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jacsym {

struct TrialFailure {
    int trial = 0;
    std::uint64_t trial_seed = 0;
    std::string input_digest;
    std::string property;
};

/// Outcome of one theorem suite. `elapsed_ms` is informational only and is
/// excluded from the JSON body so identical (theorem, trials, seed) runs
/// serialize byte-identically.
struct VerifyReport {
    std::string theorem;
    int trials = 0;
    std::uint64_t seed = 0;
    bool skipped = false;
    std::string message;
    std::vector<TrialFailure> failures;
    long elapsed_ms = 0;

    bool passed() const { return !skipped && failures.empty(); }
    Json to_json() const;
};

/// Registered theorem ids, in registry order.
const std::vector<std::string>& theorem_ids();

/// Run a registered property suite on seeded instances. Throws
/// std::invalid_argument for unknown ids.
VerifyReport verify_theorem(const std::string& name, int trials, std::uint64_t seed);

}  // namespace jacsym

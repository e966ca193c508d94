#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kodag/chains.hpp"
#include "kodag/poset.hpp"
#include "kodag/sequence.hpp"

namespace kodag::verify {

enum class Status { Pass, Fail, Report };

struct CheckResult {
    Status status = Status::Pass;
    std::string name;
    std::string detail;
};

struct Options {
    int levels = 6;                 // depth bound for fixture sweeps
    int random_count = 0;           // extra seeded random posets
    std::uint64_t seed = 0;
    std::int64_t cap = kDefaultChainCap;
    std::optional<std::string> poset_path; // user-supplied fixture document
};

/// The five sequences every fixture sweep runs over.
const std::vector<std::pair<std::string, Sequence>>& fixture_sequences();

/// The 5-node poset (sizes 1,2,2 with an identity second block) on which the
/// closed-form Mobius candidate provably disagrees with exact inversion.
GradedPoset closed_form_counterexample();

/// Deterministic batch of random posets for identity sweeps.
std::vector<GradedPoset> random_poset_batch(int count, std::uint64_t seed,
                                            int max_levels, int max_size);

/// Runs one named suite: all, zeta-equivalence, mobius, max, theorems,
/// conjectures. Conjecture checks always come back as Report.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const Options& opts);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (r.status == Status::Fail) return false;
    }
    return true;
}

std::string status_label(Status s);

} // namespace kodag::verify

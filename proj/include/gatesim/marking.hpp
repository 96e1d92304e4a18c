#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gatesim/errors.hpp"
#include "gatesim/rng.hpp"

namespace gatesim {

/// The marking process: positions 1..n, an explicit pre-marked set, then i
/// positions marked uniformly at random with replacement.
struct MarkingConfig {
    std::uint32_t n = 1;
    std::vector<std::uint32_t> pre_marked;  // 1-based positions
    std::uint64_t i = 0;
    Seed seed = 0;
};

struct MarkingOutcome {
    std::vector<bool> marks;  // marks[p-1] for position p
    std::uint32_t largest_gap = 0;
    std::uint64_t distinct_random_marks = 0;
};

/// Length of the longest contiguous (non-cyclic) run of unmarked positions.
inline std::uint32_t largest_unmarked_interval(const std::vector<bool>& marks) {
    if (marks.empty()) throw ConfigError("largest_unmarked_interval: empty sequence");
    std::uint32_t best = 0;
    std::uint32_t run = 0;
    for (const bool marked : marks) {
        if (marked) {
            run = 0;
        } else {
            ++run;
            best = std::max(best, run);
        }
    }
    return best;
}

inline MarkingOutcome run_marking_experiment(const MarkingConfig& config) {
    if (config.n < 1) throw ConfigError("marking experiment: n must be >= 1");
    MarkingOutcome outcome;
    outcome.marks.assign(config.n, false);
    for (const std::uint32_t p : config.pre_marked) {
        if (p < 1 || p > config.n) {
            throw ConfigError("marking experiment: pre-marked position " + std::to_string(p) +
                              " outside [1, " + std::to_string(config.n) + "]");
        }
        outcome.marks[p - 1] = true;
    }
    SplitMix64 rng(config.seed);
    std::vector<bool> hit(config.n, false);
    for (std::uint64_t d = 0; d < config.i; ++d) {
        const auto p = static_cast<std::uint32_t>(rng.next_below(config.n));
        outcome.marks[p] = true;
        if (!hit[p]) {
            hit[p] = true;
            ++outcome.distinct_random_marks;
        }
    }
    outcome.largest_gap = largest_unmarked_interval(outcome.marks);
    return outcome;
}

}  // namespace gatesim

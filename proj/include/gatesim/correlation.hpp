#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gatesim/errors.hpp"

namespace gatesim {

/// Exact probability as a fraction of integer sequence counts.
struct ExactProb {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const noexcept {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    }
};

/// One conditional check: P[block marked | all blocks in subset_mask marked]
/// against the unconditional P[block marked].
struct CorrelationCase {
    std::uint32_t block = 0;          // 0-based block index
    std::uint64_t subset_mask = 0;    // bitmask over blocks, excludes `block`
    ExactProb conditional;            // undefined (den 0) when the condition has count 0
    ExactProb unconditional;
    bool condition_possible = false;  // N(subset) > 0
    bool holds = true;                // vacuously true when impossible
};

struct CorrelationReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t i = 0;
    std::uint32_t num_blocks = 0;
    std::uint64_t total_sequences = 0;        // n^i
    std::vector<std::uint64_t> marked_count;  // per block: sequences marking that block
    bool formula_one_matches = false;         // marked_count[b] == n^i - (n-k)^i for all b
    bool all_inequalities_hold = false;
    std::vector<CorrelationCase> cases;       // every (block, nonempty subset of others)
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    if (base == 0) return exp == 0 ? 1 : 0;
    std::uint64_t result = 1;
    for (std::uint64_t e = 0; e < exp; ++e) {
        if (result > limit / base) return limit + 1;  // saturate past the limit
        result *= base;
    }
    return result;
}

}  // namespace detail

/// Exhaustively enumerates all n^i equally likely draw sequences of the
/// marking process restricted to n/k disjoint length-k blocks, and verifies
/// with exact integer counting that
///   (a) P[I marked | I_1 ... I_j marked] <= P[I marked] for every block I
///       and every nonempty subset of the other blocks, and
///   (b) P[I marked] == 1 - (1 - k/n)^i, i.e. the count of marking
///       sequences equals n^i - (n-k)^i.
/// No floating point enters either check.
inline CorrelationReport negative_correlation_oracle(std::uint32_t n, std::uint32_t k, std::uint64_t i,
                                                     std::uint64_t budget = 10'000'000) {
    if (n < 1 || k < 1) throw ConfigError("correlation oracle: n and k must be >= 1");
    if (n % k != 0) {
        throw ConfigError("correlation oracle: k=" + std::to_string(k) + " must divide n=" +
                          std::to_string(n));
    }
    const std::uint32_t num_blocks = n / k;
    const std::uint64_t total = detail::checked_pow(n, i, budget);
    if (total > budget) {
        throw EnumerationBudgetError(
            "correlation oracle: n^i = " + std::to_string(n) + "^" + std::to_string(i) +
                " exceeds the enumeration budget of " + std::to_string(budget),
            std::pow(static_cast<double>(n), static_cast<double>(i)), static_cast<double>(budget));
    }
    if (num_blocks > 20 || (static_cast<std::uint64_t>(num_blocks) << num_blocks) > budget) {
        throw EnumerationBudgetError(
            "correlation oracle: " + std::to_string(num_blocks) +
                " blocks require " + std::to_string(num_blocks) + "*2^" + std::to_string(num_blocks) +
                " conditional cases, past the budget of " + std::to_string(budget),
            std::ldexp(static_cast<double>(num_blocks), static_cast<int>(num_blocks)),
            static_cast<double>(budget));
    }

    // count sequences by their exact marked-block mask (draw d lands in block d/k)
    std::vector<std::uint64_t> count_by_mask(std::uint64_t{1} << num_blocks, 0);
    std::vector<std::uint32_t> digits(i, 0);
    std::uint32_t mask = 0;  // running mask for the current sequence
    std::vector<std::uint32_t> block_hits(num_blocks, 0);
    for (std::uint64_t s = 0; s < total; ++s) {
        if (s == 0) {
            // all-zero sequence: every draw lands in block 0
            block_hits[0] = static_cast<std::uint32_t>(i);
            if (i > 0) mask = 1;
        } else {
            // odometer increment; maintain block hit counts incrementally
            std::uint64_t pos = 0;
            for (;; ++pos) {
                const std::uint32_t old_block = digits[pos] / k;
                if (--block_hits[old_block] == 0) mask &= ~(1u << old_block);
                if (digits[pos] + 1 < n) {
                    digits[pos] += 1;
                    const std::uint32_t new_block = digits[pos] / k;
                    if (block_hits[new_block]++ == 0) mask |= 1u << new_block;
                    break;
                }
                digits[pos] = 0;
                if (block_hits[0]++ == 0) mask |= 1u;
            }
        }
        count_by_mask[mask] += 1;
    }

    // superset sums: marked_at_least[S] = #sequences marking every block in S
    std::vector<std::uint64_t> marked_at_least = count_by_mask;
    for (std::uint32_t b = 0; b < num_blocks; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        for (std::uint64_t s = 0; s < marked_at_least.size(); ++s) {
            if (!(s & bit)) marked_at_least[s] += marked_at_least[s | bit];
        }
    }

    CorrelationReport report;
    report.n = n;
    report.k = k;
    report.i = i;
    report.num_blocks = num_blocks;
    report.total_sequences = total;
    report.marked_count.resize(num_blocks);
    report.formula_one_matches = true;
    report.all_inequalities_hold = true;

    const std::uint64_t missed = detail::checked_pow(n - k, i, budget);  // (n-k)^i <= n^i
    for (std::uint32_t b = 0; b < num_blocks; ++b) {
        const std::uint64_t nb = marked_at_least[std::uint64_t{1} << b];
        report.marked_count[b] = nb;
        if (nb != total - missed) report.formula_one_matches = false;
    }

    const std::uint64_t full = (std::uint64_t{1} << num_blocks) - 1;
    for (std::uint32_t b = 0; b < num_blocks; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        const std::uint64_t others = full & ~bit;
        const std::uint64_t nb = report.marked_count[b];
        // iterate nonempty subsets of the other blocks
        for (std::uint64_t sub = others; sub != 0; sub = (sub - 1) & others) {
            CorrelationCase c;
            c.block = b;
            c.subset_mask = sub;
            c.unconditional = ExactProb{nb, total};
            const std::uint64_t n_sub = marked_at_least[sub];
            c.condition_possible = n_sub > 0;
            if (c.condition_possible) {
                const std::uint64_t n_both = marked_at_least[sub | bit];
                c.conditional = ExactProb{n_both, n_sub};
                // exact cross-multiplied comparison: n_both/n_sub <= nb/total
                using U128 = unsigned __int128;
                c.holds = static_cast<U128>(n_both) * total <= static_cast<U128>(nb) * n_sub;
            } else {
                c.conditional = ExactProb{0, 0};
                c.holds = true;
            }
            if (!c.holds) report.all_inequalities_hold = false;
            report.cases.push_back(c);
        }
    }
    return report;
}

}  // namespace gatesim

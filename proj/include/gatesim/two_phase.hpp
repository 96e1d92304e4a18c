#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "gatesim/bounds.hpp"
#include "gatesim/errors.hpp"
#include "gatesim/marking.hpp"
#include "gatesim/rng.hpp"

namespace gatesim {

/// Trace of the pessimistic two-phase process underlying the lower bound.
struct PhaseTrace {
    std::uint32_t n = 0;
    std::uint32_t ell = 1;
    double epsilon = 0.0;
    Seed seed = 0;

    std::uint32_t t1 = 0;                // phase-1 round count
    std::uint32_t num_gates = 0;         // sequence length n / ell
    std::uint32_t pre_marked_gates = 0;  // gates treated as informed after phase 1
    std::uint64_t n0 = 0;                // vertices making the brought-forward choice
    std::uint32_t k_obs = 0;             // largest free gate interval observed
    std::uint64_t lower_bound_estimate = 0;  // t1 + (ell - 1) + ell * k_obs
};

/// The proof's pessimistic process, which finishes at least as early as the
/// real gate model. Phase 1: informed gates double for
/// t1 = floor((1 - eps) * log2(n/ell)) rounds, capped at
/// ceil((n/ell)^(1-eps)). Phase 2: the remaining n0 vertices each pick a
/// gate uniformly at random with replacement (their choice brought
/// forward); the largest free gate interval k then forces
/// ell - 1 + ell * k further rounds.
///
/// Accounting choices the proof leaves implicit: each informed gate stands
/// for ell informed vertices, so n0 = n - ell * pre_marked_gates, and the
/// pre-marked gates occupy positions 1..m of the gate sequence.
inline PhaseTrace two_phase_simulation(std::uint32_t n, std::uint32_t ell, double epsilon, Seed seed) {
    if (n < 2) throw ConfigError("two-phase: n must be >= 2");
    if (ell < 1 || n % ell != 0) {
        throw ConfigError("two-phase: ell must divide n (got n=" + std::to_string(n) +
                          ", ell=" + std::to_string(ell) + ")");
    }
    const std::uint32_t num_gates = n / ell;
    if (num_gates < 2) throw ConfigError("two-phase: n/ell must be >= 2");
    if (!(epsilon > 0.0) || epsilon >= 1.0) throw ConfigError("two-phase: epsilon must be in (0, 1)");

    PhaseTrace trace;
    trace.n = n;
    trace.ell = ell;
    trace.epsilon = epsilon;
    trace.seed = seed;
    trace.num_gates = num_gates;

    const double log2_gates = std::log2(static_cast<double>(num_gates));
    trace.t1 = static_cast<std::uint32_t>(std::floor((1.0 - epsilon) * log2_gates));

    const std::uint64_t doubled =
        trace.t1 >= 63 ? std::uint64_t{1} << 63 : std::uint64_t{1} << trace.t1;
    const double grown = std::pow(static_cast<double>(num_gates), 1.0 - epsilon);
    // 1e-9 guard: pow can land a hair above an exactly-integral power
    const auto cap = static_cast<std::uint64_t>(std::ceil(grown - 1e-9));
    trace.pre_marked_gates = static_cast<std::uint32_t>(std::min({doubled, cap, std::uint64_t{num_gates}}));

    trace.n0 = static_cast<std::uint64_t>(n) - static_cast<std::uint64_t>(ell) * trace.pre_marked_gates;

    MarkingConfig marking;
    marking.n = num_gates;
    marking.pre_marked.resize(trace.pre_marked_gates);
    std::iota(marking.pre_marked.begin(), marking.pre_marked.end(), 1u);
    marking.i = trace.n0;
    marking.seed = seed;
    const MarkingOutcome outcome = run_marking_experiment(marking);

    trace.k_obs = outcome.largest_gap;
    trace.lower_bound_estimate = static_cast<std::uint64_t>(trace.t1) + (ell - 1) +
                                 static_cast<std::uint64_t>(ell) * trace.k_obs;
    return trace;
}

}  // namespace gatesim

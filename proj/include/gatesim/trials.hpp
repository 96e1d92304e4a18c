#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gatesim/bounds.hpp"
#include "gatesim/errors.hpp"
#include "gatesim/list_io.hpp"
#include "gatesim/lists.hpp"
#include "gatesim/protocol.hpp"
#include "gatesim/rng.hpp"
#include "gatesim/stats.hpp"

namespace gatesim {

enum class ListSource { Adversarial, Random, File };

inline std::string list_source_name(ListSource source) {
    switch (source) {
        case ListSource::Adversarial: return "adversarial";
        case ListSource::Random: return "random";
        case ListSource::File: return "file";
    }
    return "?";
}

/// A seeded Monte Carlo batch. Every trial t derives its seed from
/// (master_seed, t), so extending the batch never perturbs earlier trials,
/// and serial vs parallel execution produce identical results.
struct TrialConfig {
    std::uint32_t n = 2;
    ProtocolKind protocol = ProtocolKind::quasi_random();
    ListSource list_source = ListSource::Adversarial;
    std::string list_path;                 // when list_source == File
    std::optional<NodeId> source;          // nullopt: uniform-random per trial
    std::uint32_t trials = 1;
    Seed master_seed = 1;
    double epsilon = 0.0;                  // for the bound comparison columns
    unsigned jobs = 1;                     // worker threads; results are schedule-independent
    bool keep_traces = false;
};

struct TrialRecord {
    std::uint32_t index = 0;  // 1-based
    Seed seed = 0;
    NodeId source = 0;
    std::uint32_t rounds = 0;
};

struct TrialSummary {
    TrialConfig config;
    std::vector<TrialRecord> records;           // in trial-index order
    SummaryStats stats;
    double theoretical_lower = 0.0;             // gate-model lower bound at the config's epsilon
    double theoretical_upper = 0.0;             // quasi-random upper bound, leading term
    double fraction_at_or_above_lower = 0.0;    // rounds >= floor(theoretical_lower)
    std::vector<std::vector<std::uint32_t>> traces;  // per trial, when keep_traces
};

/// Effective gate spacing for bound comparison: the protocol's ell for list
/// protocols, 1 for fully-random push (compared against the ell = 1 forms).
inline std::uint32_t effective_ell(const ProtocolKind& protocol) {
    return protocol.uses_lists() ? protocol.ell() : 1;
}

inline Seed trial_seed(Seed master, std::uint32_t trial_index) {
    return substream_seed(master, trial_index);
}

namespace detail {

struct SingleTrialOutput {
    TrialRecord record;
    std::vector<std::uint32_t> trace;
};

template <NeighborLists Lists>
SingleTrialOutput run_one_trial(const TrialConfig& config, Lists& lists, std::uint32_t index) {
    const Seed seed = trial_seed(config.master_seed, index);
    NodeId source;
    if (config.source) {
        source = *config.source;
    } else {
        SplitMix64 rng(tagged_seed(seed, kSourceSeedTag));
        source = static_cast<NodeId>(rng.next_below(config.n)) + 1;
    }
    BroadcastEngine<Lists> engine(lists, config.protocol, source, tagged_seed(seed, kEngineSeedTag));
    BroadcastResult result = engine.run();
    SingleTrialOutput out;
    out.record = TrialRecord{index, seed, source, result.rounds};
    if (config.keep_traces) out.trace = std::move(result.informed_counts);
    return out;
}

inline SingleTrialOutput dispatch_trial(const TrialConfig& config, const AdversarialLists* adversarial,
                                        const ListFamily* from_file, std::uint32_t index) {
    switch (config.list_source) {
        case ListSource::Adversarial:
            return run_one_trial(config, *adversarial, index);
        case ListSource::Random: {
            // fresh family per trial, seeded from the trial's list substream
            LazyRandomLists lists(config.n, tagged_seed(trial_seed(config.master_seed, index), kListSeedTag));
            return run_one_trial(config, lists, index);
        }
        case ListSource::File:
            return run_one_trial(config, *from_file, index);
    }
    throw ConfigError("unknown list source");
}

}  // namespace detail

/// Runs the batch and aggregates in trial-index order. A failing trial
/// aborts the whole batch, reporting its index.
inline TrialSummary run_trials(const TrialConfig& config) {
    if (config.trials < 1) throw ConfigError("trials: need at least 1 trial");
    if (config.n < 2) throw ConfigError("trials: n must be >= 2");
    if (config.source && (*config.source < 1 || *config.source > config.n)) {
        throw ConfigError("trials: source node outside [1, n]");
    }

    std::optional<AdversarialLists> adversarial;
    std::optional<ListFamily> from_file;
    if (config.list_source == ListSource::Adversarial) {
        adversarial.emplace(config.n);
    } else if (config.list_source == ListSource::File) {
        from_file = load_lists(config.list_path);
        if (from_file->node_count() != config.n) {
            throw ConfigError("trials: list file has n=" + std::to_string(from_file->node_count()) +
                              " but the configuration says n=" + std::to_string(config.n));
        }
    }

    std::vector<detail::SingleTrialOutput> outputs(config.trials);
    std::vector<std::exception_ptr> failures(config.trials);

    const unsigned jobs = std::max(1u, config.jobs);
    auto worker_body = [&](std::uint32_t index) {
        try {
            outputs[index - 1] = detail::dispatch_trial(
                config, adversarial ? &*adversarial : nullptr, from_file ? &*from_file : nullptr, index);
        } catch (...) {
            failures[index - 1] = std::current_exception();
        }
    };

    if (jobs == 1 || config.trials == 1) {
        for (std::uint32_t t = 1; t <= config.trials; ++t) worker_body(t);
    } else {
        std::atomic<std::uint32_t> next{1};
        std::vector<std::thread> pool;
        const unsigned count = std::min<unsigned>(jobs, config.trials);
        pool.reserve(count);
        for (unsigned w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint32_t t = next.fetch_add(1);
                    if (t > config.trials) return;
                    worker_body(t);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (std::uint32_t t = 1; t <= config.trials; ++t) {
        if (!failures[t - 1]) continue;
        try {
            std::rethrow_exception(failures[t - 1]);
        } catch (const IoError& e) {
            throw IoError("trial " + std::to_string(t) + ": " + e.what());
        } catch (const RunawayError& e) {
            throw RunawayError("trial " + std::to_string(t) + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError("trial " + std::to_string(t) + ": " + e.what());
        }
    }

    TrialSummary summary;
    summary.config = config;
    summary.records.reserve(config.trials);
    std::vector<std::uint32_t> rounds;
    rounds.reserve(config.trials);
    for (auto& out : outputs) {
        summary.records.push_back(out.record);
        rounds.push_back(out.record.rounds);
        if (config.keep_traces) summary.traces.push_back(std::move(out.trace));
    }
    summary.stats = summarize(rounds);
    summary.theoretical_lower = theorem_lower_bound(config.n, effective_ell(config.protocol), config.epsilon);
    summary.theoretical_upper = adhp_upper_bound(config.n);
    const double floor_lower = std::floor(summary.theoretical_lower);
    std::uint32_t at_or_above = 0;
    for (const auto r : rounds) {
        if (static_cast<double>(r) >= floor_lower) ++at_or_above;
    }
    summary.fraction_at_or_above_lower = static_cast<double>(at_or_above) / static_cast<double>(config.trials);
    return summary;
}

/// Closed forms next to the empirical outcome, for the same (n, ell).
struct BoundComparison {
    double theorem_lower = 0.0;
    double adhp_upper = 0.0;
    double empirical_median = 0.0;
    double fraction_at_or_above_lower = 0.0;
};

inline BoundComparison compare_bounds(const TrialSummary& summary, const BoundParams& params) {
    if (params.n != summary.config.n) {
        throw ConfigError("compare_bounds: summary has n=" + std::to_string(summary.config.n) +
                          ", params have n=" + std::to_string(params.n));
    }
    if (params.ell != effective_ell(summary.config.protocol)) {
        throw ConfigError("compare_bounds: gate spacing mismatch (summary ell=" +
                          std::to_string(effective_ell(summary.config.protocol)) + ", params ell=" +
                          std::to_string(params.ell) + ")");
    }
    BoundComparison cmp;
    cmp.theorem_lower = theorem_lower_bound(params.n, params.ell, params.epsilon);
    cmp.adhp_upper = adhp_upper_bound(params.n);
    cmp.empirical_median = summary.stats.median;
    const double floor_lower = std::floor(cmp.theorem_lower);
    std::uint32_t at_or_above = 0;
    for (const auto& rec : summary.records) {
        if (static_cast<double>(rec.rounds) >= floor_lower) ++at_or_above;
    }
    cmp.fraction_at_or_above_lower =
        static_cast<double>(at_or_above) / static_cast<double>(summary.records.size());
    return cmp;
}

}  // namespace gatesim

// Acceptance suite: exact oracles, deterministic degenerate cases, and
// statistical property checks at desk scale. Prints one [PASS]/[FAIL] line
// per criterion and exits nonzero if any criterion fails.
//
// Usage: acceptance [--cli PATH]   (PATH is needed for the reproducibility
// criterion, which exercises the actual `trials` command).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gatesim/gatesim.hpp"

namespace fs = std::filesystem;
using namespace gatesim;

namespace {

int criteria_failed = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool ok, double seconds, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << criterion << " " << detail << "  ("
              << seconds << " s)\n";
    if (!ok) ++criteria_failed;
}

// Trace pool for criterion 8: every trace simulated by criteria 2-7.
struct TaggedTrace {
    std::uint32_t n;
    std::vector<std::uint32_t> trace;
};
std::vector<TaggedTrace> all_traces;

void collect_traces(std::uint32_t n, const TrialSummary& summary) {
    for (const auto& trace : summary.traces) all_traces.push_back({n, trace});
}

bool trace_invariants_hold(const TaggedTrace& tagged, std::string& why) {
    const auto& t = tagged.trace;
    if (t.empty() || t.front() != 1 || t.back() != tagged.n) {
        why = "trace endpoints wrong";
        return false;
    }
    for (std::size_t idx = 1; idx < t.size(); ++idx) {
        if (t[idx] < t[idx - 1]) {
            why = "informed count decreased";
            return false;
        }
        if (t[idx] > 2 * t[idx - 1]) {
            why = "doubling cap violated";
            return false;
        }
    }
    const auto rounds = static_cast<std::uint32_t>(t.size() - 1);
    const auto min_rounds =
        static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(tagged.n))));
    if (rounds < min_rounds) {
        why = "fewer rounds than ceil(log2 n)";
        return false;
    }
    return true;
}

void criterion_1_exact_correlation_oracle() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;
    detail << "exact correlation oracle:";
    for (const auto& [n, k, i] :
         {std::tuple{4u, 2u, 2u}, std::tuple{6u, 2u, 3u}, std::tuple{6u, 3u, 2u}, std::tuple{8u, 2u, 3u}}) {
        const CorrelationReport report = negative_correlation_oracle(n, k, std::uint64_t{i});
        const bool case_ok = report.all_inequalities_hold && report.formula_one_matches;
        ok = ok && case_ok;
        detail << " (" << n << "," << k << "," << i << ")=" << (case_ok ? "exact" : "VIOLATED");
    }
    const double secs = timer.seconds();
    ok = ok && secs < 1.0;
    report(1, ok, secs, detail.str());
}

void criterion_2_deterministic_degenerate() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;
    detail << "degenerate gate runs:";
    for (const std::uint32_t n : {4u, 16u, 256u, 4096u}) {
        std::uint32_t rounds = 0;
        for (const Seed seed : {Seed{1}, Seed{12345}}) {
            TrialConfig config;
            config.n = n;
            config.protocol = ProtocolKind::gate_model(n - 1, true);
            config.list_source = ListSource::Adversarial;
            config.source = 1;
            config.trials = 1;
            config.master_seed = seed;
            config.keep_traces = true;
            const TrialSummary summary = run_trials(config);
            collect_traces(n, summary);
            rounds = summary.records[0].rounds;
            ok = ok && rounds == n - 1;
        }
        // the closed form cancels to n-1 at ell=n for any epsilon
        for (const double eps : {0.0, 0.2, 0.5}) {
            ok = ok && std::abs(theorem_lower_bound(n, n, eps) - static_cast<double>(n - 1)) < 1e-9;
        }
        detail << " n=" << n << ":" << rounds;
    }
    const double secs = timer.seconds();
    ok = ok && secs < 1.0;
    report(2, ok, secs, detail.str());
}

void criterion_3_quasi_random_sanity() {
    Timer timer;
    const std::uint32_t n = 1u << 14;
    TrialConfig config;
    config.n = n;
    config.protocol = ProtocolKind::quasi_random();
    config.list_source = ListSource::Random;
    config.trials = 200;
    config.master_seed = 42;
    config.epsilon = 0.0;
    config.keep_traces = true;
    const TrialSummary summary = run_trials(config);
    collect_traces(n, summary);
    const double lower = 0.90 * adhp_upper_bound(n);
    const double upper = 1.15 * adhp_upper_bound(n);
    const double median = summary.stats.median;
    const double secs = timer.seconds();
    const bool ok = median >= lower && median <= upper && secs < 10.0;
    std::ostringstream detail;
    detail << "quasi-random on random lists: median " << median << " in [" << lower << ", " << upper
           << "]";
    report(3, ok, secs, detail.str());
}

void criterion_4_fully_random_baseline() {
    Timer timer;
    const std::uint32_t n = 1u << 14;
    TrialConfig config;
    config.n = n;
    config.protocol = ProtocolKind::fully_random();
    config.list_source = ListSource::Adversarial;  // unused by the protocol
    config.trials = 200;
    config.master_seed = 43;
    config.keep_traces = true;
    const TrialSummary summary = run_trials(config);
    collect_traces(n, summary);
    const double center = pittel_reference(n);
    const double lower = center - kPittelDefaultSlack;
    const double upper = center + kPittelDefaultSlack;
    const double median = summary.stats.median;
    const double secs = timer.seconds();
    const bool ok = median >= lower && median <= upper && secs < 10.0;
    std::ostringstream detail;
    detail << "fully-random push: median " << median << " in [" << lower << ", " << upper << "]";
    report(4, ok, secs, detail.str());
}

void criterion_5_marking_lemma_desk_scale() {
    Timer timer;
    const std::uint32_t n = 100000;
    const std::uint64_t draws = 100000;
    const double epsilon = 0.3;
    const double k = lemma_threshold(n, draws, epsilon);
    const auto floor_k = static_cast<std::uint32_t>(std::floor(k));
    bool ok = floor_k == 8;
    std::uint32_t hits = 0;
    const std::uint32_t trials = 200;
    for (std::uint32_t t = 1; t <= trials; ++t) {
        MarkingConfig config;
        config.n = n;
        config.i = draws;
        config.seed = substream_seed(777, t);
        const MarkingOutcome outcome = run_marking_experiment(config);
        if (outcome.largest_gap >= floor_k) ++hits;
    }
    const double fraction = static_cast<double>(hits) / trials;
    const double secs = timer.seconds();
    ok = ok && fraction >= 0.95 && secs < 30.0;
    std::ostringstream detail;
    detail << "marking lemma: floor(k)=" << floor_k << ", fraction with gap >= 8: " << fraction
           << " (need >= 0.95, analytic estimate 0.985)";
    report(5, ok, secs, detail.str());
}

void criterion_6_two_phase_dominance() {
    Timer timer;
    const std::uint32_t n = 1u << 16;
    const std::uint32_t ell = 64;
    const double epsilon = 0.2;
    const Seed master = 4242;
    const std::uint32_t trials = 100;

    double estimate_sum = 0.0;
    for (std::uint32_t t = 1; t <= trials; ++t) {
        const PhaseTrace trace = two_phase_simulation(n, ell, epsilon, substream_seed(master, t));
        estimate_sum += static_cast<double>(trace.lower_bound_estimate);
    }
    const double mean_estimate = estimate_sum / trials;

    TrialConfig config;
    config.n = n;
    config.protocol = ProtocolKind::gate_model(ell);
    config.list_source = ListSource::Adversarial;
    config.trials = trials;
    config.master_seed = master;  // paired seeds: trial t shares substream_seed(master, t)
    config.epsilon = epsilon;
    config.keep_traces = true;
    const TrialSummary summary = run_trials(config);
    collect_traces(n, summary);

    const double secs = timer.seconds();
    const bool ok = mean_estimate <= summary.stats.mean && secs < 60.0;
    std::ostringstream detail;
    detail << "two-phase dominance: mean estimate " << mean_estimate << " <= mean empirical "
           << summary.stats.mean;
    report(6, ok, secs, detail.str());
}

void criterion_7_randomness_time_trend() {
    Timer timer;
    const std::uint32_t n = 1u << 16;
    double median_1 = 0.0;
    double median_256 = 0.0;
    std::ostringstream detail;
    detail << "randomness-time trend:";
    for (const std::uint32_t ell : {1u, 64u, 256u}) {
        TrialConfig config;
        config.n = n;
        config.protocol = ProtocolKind::gate_model(ell);
        config.list_source = ListSource::Adversarial;
        config.trials = 100;
        config.master_seed = 2026;
        config.keep_traces = true;
        const TrialSummary summary = run_trials(config);
        collect_traces(n, summary);
        detail << " ell=" << ell << ": median " << summary.stats.median;
        if (ell == 1) median_1 = summary.stats.median;
        if (ell == 256) median_256 = summary.stats.median;
    }
    const double gap = median_256 - median_1;
    const double secs = timer.seconds();
    const bool ok = gap >= 200.0 && secs < 120.0;
    detail << "; spread " << gap << " (need >= 200)";
    report(7, ok, secs, detail.str());
}

void criterion_8_invariant_suite() {
    Timer timer;
    bool ok = true;
    std::string why;
    std::size_t checked = 0;
    for (const auto& tagged : all_traces) {
        if (!trace_invariants_hold(tagged, why)) {
            ok = false;
            break;
        }
        ++checked;
    }

    // quasi-random vs gate spacing 1: identical dynamics over 50 shared seeds
    const std::uint32_t n = 1u << 10;
    bool reduction_ok = true;
    for (Seed seed = 1; seed <= 50 && reduction_ok; ++seed) {
        {
            AdversarialLists a(n);
            AdversarialLists b(n);
            const BroadcastResult quasi = run_broadcast(a, ProtocolKind::quasi_random(), 1, seed);
            const BroadcastResult gate1 = run_broadcast(b, ProtocolKind::gate_model(1), 1, seed);
            reduction_ok = reduction_ok && quasi.same_dynamics(gate1);
        }
        {
            LazyRandomLists a(n, seed);
            LazyRandomLists b(n, seed);
            const BroadcastResult quasi = run_broadcast(a, ProtocolKind::quasi_random(), 1, seed);
            const BroadcastResult gate1 = run_broadcast(b, ProtocolKind::gate_model(1), 1, seed);
            reduction_ok = reduction_ok && quasi.same_dynamics(gate1);
        }
    }
    ok = ok && reduction_ok;

    std::ostringstream detail;
    detail << "invariants on " << checked << "/" << all_traces.size()
           << " traces (monotone, doubling cap, round floor)";
    if (!why.empty()) detail << ": " << why;
    detail << "; quasi == gate(1) over 50 seeds: " << (reduction_ok ? "bit-identical" : "DIVERGED");
    report(8, ok, timer.seconds(), detail.str());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_9_reproducibility(const std::string& cli) {
    Timer timer;
    if (cli.empty() || !fs::exists(cli)) {
        report(9, false, timer.seconds(), "reproducibility: CLI binary not found (pass --cli PATH)");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "gatesim_acceptance";
    fs::create_directories(dir);
    bool ok = true;
    std::ostringstream detail;
    detail << "byte-identical exports:";
    int case_index = 0;
    for (const std::string& fmt : {std::string("csv"), std::string("json")}) {
        for (const std::string& base :
             {std::string("trials --n 4096 --protocol gate --ell 64 --lists adversarial --trials 50 "
                          "--seed 7"),
              std::string("trials --n 2048 --protocol quasi --lists random --trials 50 --seed 8")}) {
            const fs::path a = dir / ("a" + std::to_string(case_index) + "." + fmt);
            const fs::path b = dir / ("b" + std::to_string(case_index) + "." + fmt);
            const fs::path c = dir / ("c" + std::to_string(case_index) + "." + fmt);
            const std::string common = cli + " " + base + " --format " + fmt + " --out ";
            const std::string quiet = " > /dev/null 2> /dev/null";
            bool ran = std::system((common + a.string() + quiet).c_str()) == 0;
            ran = ran && std::system((common + b.string() + quiet).c_str()) == 0;
            ran = ran && std::system((common + c.string() + " --jobs 4" + quiet).c_str()) == 0;
            const bool identical = ran && slurp(a) == slurp(b) && slurp(a) == slurp(c);
            ok = ok && identical;
            detail << " case" << case_index << "/" << fmt << "="
                   << (identical ? "stable" : "UNSTABLE");
            ++case_index;
        }
    }
    fs::remove_all(dir);
    report(9, ok, timer.seconds(), detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int idx = 1; idx + 1 < argc; ++idx) {
        if (std::string(argv[idx]) == "--cli") cli = argv[idx + 1];
    }

    criterion_1_exact_correlation_oracle();
    criterion_2_deterministic_degenerate();
    criterion_3_quasi_random_sanity();
    criterion_4_fully_random_baseline();
    criterion_5_marking_lemma_desk_scale();
    criterion_6_two_phase_dominance();
    criterion_7_randomness_time_trend();
    criterion_8_invariant_suite();
    criterion_9_reproducibility(cli);

    if (criteria_failed != 0) {
        std::cout << criteria_failed << " criterion/criteria FAILED\n";
        return 1;
    }
    std::cout << "all 9 acceptance criteria passed\n";
    return 0;
}

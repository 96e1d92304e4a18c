// Command-line front end: single runs, Monte Carlo batches, closed-form
// bounds, the marking experiment, the two-phase process, the exact
// correlation oracle, and list-file generation.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error,
// 4 enumeration budget exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gatesim/gatesim.hpp"

namespace {

using namespace gatesim;

struct ListSpec {
    ListSource source = ListSource::Adversarial;
    std::string path;
};

ListSpec parse_list_spec(const std::string& text) {
    if (text == "adversarial") return {ListSource::Adversarial, {}};
    if (text == "random") return {ListSource::Random, {}};
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        if (path.empty()) throw ConfigError("--lists file: needs a path");
        return {ListSource::File, path};
    }
    throw ConfigError("unknown list source '" + text + "' (expected adversarial, random, or file:PATH)");
}

std::optional<NodeId> parse_source(const std::string& text, std::uint32_t n) {
    if (text == "random") return std::nullopt;
    try {
        const unsigned long id = std::stoul(text);
        if (id < 1 || id > n) {
            throw ConfigError("source node " + text + " outside [1, " + std::to_string(n) + "]");
        }
        return static_cast<NodeId>(id);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("source must be a node id or 'random', got '" + text + "'");
    }
}

ProtocolKind parse_protocol(const std::string& name, std::uint32_t ell, bool allow_nondivisible) {
    if (name == "push-random") {
        if (ell != 1) throw ConfigError("--ell has no meaning for push-random");
        return ProtocolKind::fully_random();
    }
    if (name == "quasi") {
        if (ell != 1) throw ConfigError("the quasi-random model fixes ell = 1; use --protocol gate");
        return ProtocolKind::quasi_random();
    }
    if (name == "gate") return ProtocolKind::gate_model(ell, allow_nondivisible);
    throw ConfigError("unknown protocol '" + name + "' (expected push-random, quasi, or gate)");
}

void maybe_warn_lemma_regime(std::uint32_t n, std::uint64_t i) {
    if (!lemma_draws_in_regime(n, i)) {
        std::cerr << "warning: i = " << i << " is below 10*ln^2(n); the marking lemma assumes i in omega(ln^2 n)\n";
    }
}

int cmd_simulate(std::uint32_t n, const std::string& protocol_name, std::uint32_t ell,
                 const std::string& lists_text, const std::string& source_text, Seed seed,
                 bool allow_nondivisible) {
    const ProtocolKind protocol = parse_protocol(protocol_name, ell, allow_nondivisible);
    const ListSpec spec = parse_list_spec(lists_text);
    NodeId source;
    if (auto fixed = parse_source(source_text, n)) {
        source = *fixed;
    } else {
        SplitMix64 rng(tagged_seed(seed, kSourceSeedTag));
        source = static_cast<NodeId>(rng.next_below(n)) + 1;
    }

    BroadcastResult result;
    switch (spec.source) {
        case ListSource::Adversarial: {
            AdversarialLists lists(n);
            result = run_broadcast(lists, protocol, source, seed);
            break;
        }
        case ListSource::Random: {
            LazyRandomLists lists(n, tagged_seed(seed, kListSeedTag));
            result = run_broadcast(lists, protocol, source, seed);
            break;
        }
        case ListSource::File: {
            const ListFamily lists = load_lists(spec.path);
            if (lists.node_count() != n) {
                throw ConfigError("list file has n=" + std::to_string(lists.node_count()) +
                                  " but --n is " + std::to_string(n));
            }
            result = run_broadcast(lists, protocol, source, seed);
            break;
        }
    }

    std::cout << "protocol: " << protocol.name() << "\n";
    std::cout << "n: " << n << "\n";
    if (protocol.uses_lists()) std::cout << "ell: " << protocol.ell() << "\n";
    std::cout << "source: " << source << "\n";
    std::cout << "seed: " << seed << "\n";
    std::cout << "rounds: " << result.rounds << "\n";
    std::cout << "informed_counts:";
    for (const auto c : result.informed_counts) std::cout << ' ' << c;
    std::cout << "\n";
    return 0;
}

int cmd_trials(std::uint32_t n, const std::string& protocol_name, std::uint32_t ell,
               const std::string& lists_text, const std::string& source_text, std::uint32_t trials,
               Seed seed, double epsilon, unsigned jobs, const std::string& format_name,
               const std::string& out_path, bool allow_nondivisible) {
    TrialConfig config;
    config.n = n;
    config.protocol = parse_protocol(protocol_name, ell, allow_nondivisible);
    const ListSpec spec = parse_list_spec(lists_text);
    config.list_source = spec.source;
    config.list_path = spec.path;
    config.source = parse_source(source_text, n);
    config.trials = trials;
    config.master_seed = seed;
    config.epsilon = epsilon;
    config.jobs = jobs;

    const TrialSummary summary = run_trials(config);

    std::cout << "protocol: " << config.protocol.name() << "  n: " << n
              << "  lists: " << list_source_name(config.list_source) << "  trials: " << trials
              << "  seed: " << seed << "\n";
    std::cout << "rounds: mean " << fmt_fixed(summary.stats.mean) << ", median "
              << fmt_fixed(summary.stats.median) << ", min " << summary.stats.min << ", max "
              << summary.stats.max << ", q05 " << fmt_fixed(summary.stats.q05) << ", q95 "
              << fmt_fixed(summary.stats.q95) << "\n";
    std::cout << "theorem lower bound (eps=" << fmt_fixed(epsilon)
              << "): " << fmt_fixed(summary.theoretical_lower) << "\n";
    std::cout << "quasi-random upper bound leading term: " << fmt_fixed(summary.theoretical_upper)
              << "\n";
    std::cout << "fraction of trials at or above floor(lower): "
              << fmt_fixed(summary.fraction_at_or_above_lower) << "\n";

    if (!out_path.empty()) {
        std::ostringstream content;
        if (parse_export_format(format_name) == ExportFormat::Csv) {
            export_trials_csv(summary, content);
        } else {
            export_trials_json(summary, content);
        }
        write_text_file(out_path, content.str());
        std::cout << "wrote " << format_name << " to " << out_path << "\n";
    }
    return 0;
}

int cmd_bounds(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint64_t i, std::uint64_t m,
               double slack) {
    std::cout << "theorem_lower_bound(n=" << n << ", ell=" << ell << ", eps=" << fmt_fixed(epsilon)
              << "): " << fmt_fixed(theorem_lower_bound(n, ell, epsilon)) << "\n";
    std::cout << "adhp_upper_bound(n=" << n << "): " << fmt_fixed(adhp_upper_bound(n)) << "\n";
    const double pittel = pittel_reference(n);
    std::cout << "pittel_reference(n=" << n << "): " << fmt_fixed(pittel) << "  window ["
              << fmt_fixed(pittel - slack) << ", " << fmt_fixed(pittel + slack) << "]\n";
    if (i > 0) {
        maybe_warn_lemma_regime(n, i);
        const double k = lemma_threshold(n, i, epsilon);
        std::cout << "lemma_threshold(n=" << n << ", i=" << i << ", eps=" << fmt_fixed(epsilon)
                  << "): " << fmt_fixed(k) << "\n";
        std::cout << "lemma_failure_bound proof form (m=" << m
                  << "): " << fmt_fixed(lemma_failure_bound(n, m, i, epsilon)) << "\n";
        std::cout << "lemma_failure_bound statement form (m=" << m << "): "
                  << fmt_fixed(lemma_failure_bound(n, m, i, epsilon, FailureBoundForm::Statement))
                  << "\n";
    }
    return 0;
}

int cmd_lemma(std::uint32_t n, std::uint64_t m, std::uint64_t i, double epsilon, std::uint32_t trials,
              Seed seed, const std::string& format_name, const std::string& out_path) {
    if (trials < 1) throw ConfigError("lemma: need at least 1 trial");
    if (m > n) throw ConfigError("lemma: m cannot exceed n");
    maybe_warn_lemma_regime(n, i);

    const double k = lemma_threshold(n, i, epsilon);
    const auto floor_k = static_cast<std::uint32_t>(k);

    std::vector<LemmaRow> rows;
    rows.reserve(trials);
    std::uint32_t at_or_above = 0;
    double gap_sum = 0.0;
    for (std::uint32_t t = 1; t <= trials; ++t) {
        MarkingConfig config;
        config.n = n;
        config.pre_marked.resize(m);
        std::iota(config.pre_marked.begin(), config.pre_marked.end(), 1u);
        config.i = i;
        config.seed = substream_seed(seed, t);
        const MarkingOutcome outcome = run_marking_experiment(config);
        rows.push_back({t, config.seed, n, m, i, outcome.largest_gap, outcome.distinct_random_marks});
        if (outcome.largest_gap >= floor_k) ++at_or_above;
        gap_sum += outcome.largest_gap;
    }
    const double fraction = static_cast<double>(at_or_above) / trials;

    std::cout << "n: " << n << "  m: " << m;
    if (m > 0) std::cout << " (positions 1.." << m << " pre-marked)";
    std::cout << "  i: " << i << "  trials: " << trials << "  seed: " << seed << "\n";
    std::cout << "threshold k: " << fmt_fixed(k) << "  floor(k): " << floor_k << "\n";
    std::cout << "fraction of trials with largest gap >= floor(k): " << fmt_fixed(fraction) << "\n";
    std::cout << "mean largest gap: " << fmt_fixed(gap_sum / trials) << "\n";
    std::cout << "failure bound, proof form: " << fmt_fixed(lemma_failure_bound(n, m, i, epsilon))
              << "\n";
    std::cout << "failure bound, statement form: "
              << fmt_fixed(lemma_failure_bound(n, m, i, epsilon, FailureBoundForm::Statement)) << "\n";

    if (!out_path.empty()) {
        std::ostringstream content;
        if (parse_export_format(format_name) == ExportFormat::Csv) {
            export_lemma_csv(rows, content);
        } else {
            export_lemma_json(rows, k, fraction, content);
        }
        write_text_file(out_path, content.str());
        std::cout << "wrote " << format_name << " to " << out_path << "\n";
    }
    return 0;
}

int cmd_two_phase(std::uint32_t n, std::uint32_t ell, double epsilon, std::uint32_t trials, Seed seed,
                  const std::string& format_name, const std::string& out_path) {
    if (trials < 1) throw ConfigError("two-phase: need at least 1 trial");
    std::vector<PhaseTrace> traces;
    traces.reserve(trials);
    double estimate_sum = 0.0;
    double k_sum = 0.0;
    for (std::uint32_t t = 1; t <= trials; ++t) {
        traces.push_back(two_phase_simulation(n, ell, epsilon, substream_seed(seed, t)));
        estimate_sum += static_cast<double>(traces.back().lower_bound_estimate);
        k_sum += traces.back().k_obs;
    }
    const PhaseTrace& first = traces.front();
    std::cout << "n: " << n << "  ell: " << ell << "  eps: " << fmt_fixed(epsilon)
              << "  trials: " << trials << "  seed: " << seed << "\n";
    std::cout << "t1: " << first.t1 << "  gates: " << first.num_gates
              << "  pre-marked gates: " << first.pre_marked_gates << "  n0: " << first.n0 << "\n";
    std::cout << "mean k_obs: " << fmt_fixed(k_sum / trials) << "\n";
    std::cout << "mean lower bound estimate: " << fmt_fixed(estimate_sum / trials) << "\n";
    std::cout << "theorem closed form: " << fmt_fixed(theorem_lower_bound(n, ell, epsilon)) << "\n";

    if (!out_path.empty()) {
        std::ostringstream content;
        if (parse_export_format(format_name) == ExportFormat::Csv) {
            export_two_phase_csv(traces, content);
        } else {
            export_two_phase_json(traces, content);
        }
        write_text_file(out_path, content.str());
        std::cout << "wrote " << format_name << " to " << out_path << "\n";
    }
    return 0;
}

int cmd_correlation(std::uint32_t n, std::uint32_t k, std::uint64_t i, std::uint64_t budget) {
    const CorrelationReport report = negative_correlation_oracle(n, k, i, budget);
    std::cout << "n: " << report.n << "  k: " << report.k << "  i: " << report.i
              << "  blocks: " << report.num_blocks << "  sequences: " << report.total_sequences
              << "\n";
    for (std::uint32_t b = 0; b < report.num_blocks; ++b) {
        std::cout << "P[block " << b + 1 << " marked] = " << report.marked_count[b] << "/"
                  << report.total_sequences << "\n";
    }
    std::cout << "formula (1) exact match: " << (report.formula_one_matches ? "yes" : "NO") << "\n";
    for (const auto& c : report.cases) {
        std::cout << "P[block " << c.block + 1 << " | blocks {";
        bool first = true;
        for (std::uint32_t b = 0; b < report.num_blocks; ++b) {
            if (c.subset_mask & (std::uint64_t{1} << b)) {
                if (!first) std::cout << ',';
                std::cout << b + 1;
                first = false;
            }
        }
        std::cout << "}] = ";
        if (c.condition_possible) {
            std::cout << c.conditional.num << "/" << c.conditional.den;
        } else {
            std::cout << "undefined (condition impossible)";
        }
        std::cout << "  vs  " << c.unconditional.num << "/" << c.unconditional.den << "  "
                  << (c.holds ? "ok" : "VIOLATED") << "\n";
    }
    std::cout << "all conditional inequalities hold: " << (report.all_inequalities_hold ? "yes" : "NO")
              << "\n";
    return report.all_inequalities_hold && report.formula_one_matches ? 0 : 2;
}

int cmd_gen_lists(std::uint32_t n, const std::string& lists_text, Seed seed,
                  const std::string& out_path) {
    const ListSpec spec = parse_list_spec(lists_text);
    ListFamily family;
    switch (spec.source) {
        case ListSource::Adversarial:
            family = build_adversarial_lists(n);
            break;
        case ListSource::Random:
            family = build_random_lists(n, seed);
            break;
        case ListSource::File:
            throw ConfigError("gen-lists writes files; --lists must be adversarial or random");
    }
    save_lists(family, out_path);
    std::cout << "wrote " << list_source_name(spec.source) << " lists for n=" << n << " to "
              << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rumor spreading laboratory: quasi-random and gate-model push protocols on the "
                 "complete graph, with bound evaluators and Monte Carlo experiments"};
    app.require_subcommand(1);

    // shared option storage
    std::uint32_t n = 16;
    std::uint32_t ell = 1;
    std::string protocol_name = "quasi";
    std::string lists_text = "adversarial";
    std::string source_text = "random";
    std::uint32_t trials = 100;
    Seed seed = 1;
    double epsilon = 0.2;
    std::string format_name = "csv";
    std::string out_path;
    bool allow_nondivisible = false;
    unsigned jobs = 1;
    std::uint64_t draws = 0;
    std::uint64_t pre_marks = 0;
    double slack = kPittelDefaultSlack;
    std::uint32_t block_len = 1;
    std::uint64_t budget = 10'000'000;

    auto* simulate = app.add_subcommand("simulate", "Run one broadcast and print its trace");
    simulate->add_option("--n", n, "node count")->required();
    simulate->add_option("--protocol", protocol_name, "push-random|quasi|gate");
    simulate->add_option("--ell", ell, "gate spacing (gate protocol)");
    simulate->add_option("--lists", lists_text, "adversarial|random|file:PATH");
    simulate->add_option("--source", source_text, "source node id or 'random'");
    simulate->add_option("--seed", seed, "master seed");
    simulate->add_flag("--allow-nondivisible", allow_nondivisible, "permit ell that does not divide n");

    auto* trials_cmd = app.add_subcommand("trials", "Run a seeded Monte Carlo batch");
    trials_cmd->add_option("--n", n, "node count")->required();
    trials_cmd->add_option("--protocol", protocol_name, "push-random|quasi|gate");
    trials_cmd->add_option("--ell", ell, "gate spacing (gate protocol)");
    trials_cmd->add_option("--lists", lists_text, "adversarial|random|file:PATH");
    trials_cmd->add_option("--source", source_text, "source node id or 'random'");
    trials_cmd->add_option("--trials", trials, "number of trials");
    trials_cmd->add_option("--seed", seed, "master seed");
    trials_cmd->add_option("--epsilon", epsilon, "epsilon for the bound comparison");
    trials_cmd->add_option("--jobs", jobs, "worker threads (results are schedule-independent)");
    trials_cmd->add_option("--format", format_name, "csv|json");
    trials_cmd->add_option("--out", out_path, "export path");
    trials_cmd->add_flag("--allow-nondivisible", allow_nondivisible, "permit ell that does not divide n");

    auto* bounds_cmd = app.add_subcommand("bounds", "Print the closed-form bounds");
    bounds_cmd->add_option("--n", n, "node count")->required();
    bounds_cmd->add_option("--ell", ell, "gate spacing");
    bounds_cmd->add_option("--epsilon", epsilon, "epsilon");
    bounds_cmd->add_option("--i", draws, "random markings for the lemma forms");
    bounds_cmd->add_option("--m", pre_marks, "pre-marked elements for the lemma forms");
    bounds_cmd->add_option("--slack", slack, "additive window for the fully-random reference");

    auto* lemma_cmd = app.add_subcommand("lemma", "Run the marking experiment batch");
    lemma_cmd->add_option("--n", n, "sequence length")->required();
    lemma_cmd->add_option("--m", pre_marks, "pre-marked count (positions 1..m)");
    lemma_cmd->add_option("--i", draws, "uniform draws with replacement")->required();
    lemma_cmd->add_option("--epsilon", epsilon, "epsilon for the threshold");
    lemma_cmd->add_option("--trials", trials, "number of seeded trials");
    lemma_cmd->add_option("--seed", seed, "master seed");
    lemma_cmd->add_option("--format", format_name, "csv|json");
    lemma_cmd->add_option("--out", out_path, "export path");

    auto* two_phase_cmd = app.add_subcommand("two-phase", "Run the pessimistic two-phase process");
    two_phase_cmd->add_option("--n", n, "node count")->required();
    two_phase_cmd->add_option("--ell", ell, "gate spacing (must divide n)");
    two_phase_cmd->add_option("--epsilon", epsilon, "epsilon");
    two_phase_cmd->add_option("--trials", trials, "number of seeded trials");
    two_phase_cmd->add_option("--seed", seed, "master seed");
    two_phase_cmd->add_option("--format", format_name, "csv|json");
    two_phase_cmd->add_option("--out", out_path, "export path");

    auto* corr_cmd = app.add_subcommand("correlation-check", "Exact negative-correlation oracle");
    corr_cmd->add_option("--n", n, "sequence length")->required();
    corr_cmd->add_option("--k", block_len, "block length (must divide n)")->required();
    corr_cmd->add_option("--i", draws, "draw count")->required();
    corr_cmd->add_option("--budget", budget, "enumeration budget (sequences)");

    auto* gen_cmd = app.add_subcommand("gen-lists", "Write a list family to a file");
    gen_cmd->add_option("--n", n, "node count")->required();
    gen_cmd->add_option("--lists", lists_text, "adversarial|random");
    gen_cmd->add_option("--seed", seed, "seed for random lists");
    gen_cmd->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) {
            return cmd_simulate(n, protocol_name, ell, lists_text, source_text, seed,
                                allow_nondivisible);
        }
        if (trials_cmd->parsed()) {
            return cmd_trials(n, protocol_name, ell, lists_text, source_text, trials, seed, epsilon,
                              jobs, format_name, out_path, allow_nondivisible);
        }
        if (bounds_cmd->parsed()) return cmd_bounds(n, ell, epsilon, draws, pre_marks, slack);
        if (lemma_cmd->parsed()) {
            return cmd_lemma(n, pre_marks, draws, epsilon, trials, seed, format_name, out_path);
        }
        if (two_phase_cmd->parsed()) {
            return cmd_two_phase(n, ell, epsilon, trials, seed, format_name, out_path);
        }
        if (corr_cmd->parsed()) return cmd_correlation(n, block_len, draws, budget);
        if (gen_cmd->parsed()) return cmd_gen_lists(n, lists_text, seed, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const EnumerationBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RunawayError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "gatesim/errors.hpp"
#include "gatesim/marking.hpp"
#include "gatesim/trials.hpp"
#include "gatesim/two_phase.hpp"

namespace gatesim {

// Exports are byte-stable for fixed inputs: fixed field order, integers in
// decimal, reals always formatted with 6 decimal places.

inline std::string fmt_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

enum class ExportFormat { Csv, Json };

inline ExportFormat parse_export_format(const std::string& name) {
    if (name == "csv") return ExportFormat::Csv;
    if (name == "json") return ExportFormat::Json;
    throw ConfigError("unknown export format '" + name + "' (expected csv or json)");
}

inline std::string source_field(const TrialConfig& config) {
    return config.source ? std::to_string(*config.source) : std::string("random");
}

inline constexpr const char* kTrialsCsvHeader = "trial_index,seed,n,ell,protocol,source,rounds";

inline void export_trials_csv(const TrialSummary& summary, std::ostream& out) {
    out << kTrialsCsvHeader << '\n';
    const auto& config = summary.config;
    const std::uint32_t ell = config.protocol.uses_lists() ? config.protocol.ell() : 0;
    for (const auto& rec : summary.records) {
        out << rec.index << ',' << rec.seed << ',' << config.n << ',' << ell << ','
            << config.protocol.name() << ',' << rec.source << ',' << rec.rounds << '\n';
    }
}

inline void export_trials_json(const TrialSummary& summary, std::ostream& out) {
    const auto& config = summary.config;
    out << "{\n";
    out << "  \"config\": {";
    out << "\"n\": " << config.n;
    out << ", \"ell\": " << (config.protocol.uses_lists() ? config.protocol.ell() : 0);
    out << ", \"protocol\": \"" << config.protocol.name() << "\"";
    out << ", \"lists\": \"" << list_source_name(config.list_source) << "\"";
    out << ", \"source\": \"" << source_field(config) << "\"";
    out << ", \"trials\": " << config.trials;
    out << ", \"seed\": " << config.master_seed;
    out << ", \"epsilon\": " << fmt_fixed(config.epsilon);
    out << "},\n";
    out << "  \"rounds\": [";
    for (std::size_t idx = 0; idx < summary.records.size(); ++idx) {
        if (idx != 0) out << ", ";
        out << summary.records[idx].rounds;
    }
    out << "],\n";
    out << "  \"mean\": " << fmt_fixed(summary.stats.mean) << ",\n";
    out << "  \"median\": " << fmt_fixed(summary.stats.median) << ",\n";
    out << "  \"min\": " << summary.stats.min << ",\n";
    out << "  \"max\": " << summary.stats.max << ",\n";
    out << "  \"q05\": " << fmt_fixed(summary.stats.q05) << ",\n";
    out << "  \"q95\": " << fmt_fixed(summary.stats.q95) << ",\n";
    out << "  \"theoretical_lower\": " << fmt_fixed(summary.theoretical_lower) << ",\n";
    out << "  \"theoretical_upper\": " << fmt_fixed(summary.theoretical_upper) << ",\n";
    out << "  \"fraction_at_or_above_lower\": " << fmt_fixed(summary.fraction_at_or_above_lower) << "\n";
    out << "}\n";
}

/// One marking-experiment trial, as exported by the `lemma` command.
struct LemmaRow {
    std::uint32_t index = 0;
    Seed seed = 0;
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t i = 0;
    std::uint32_t largest_gap = 0;
    std::uint64_t distinct_random_marks = 0;
};

inline void export_lemma_csv(const std::vector<LemmaRow>& rows, std::ostream& out) {
    out << "trial_index,seed,n,m,i,largest_gap,distinct_random_marks\n";
    for (const auto& r : rows) {
        out << r.index << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.i << ','
            << r.largest_gap << ',' << r.distinct_random_marks << '\n';
    }
}

inline void export_lemma_json(const std::vector<LemmaRow>& rows, double threshold,
                              double fraction_at_or_above, std::ostream& out) {
    out << "{\n";
    out << "  \"threshold_k\": " << fmt_fixed(threshold) << ",\n";
    out << "  \"fraction_at_or_above_floor_k\": " << fmt_fixed(fraction_at_or_above) << ",\n";
    out << "  \"gaps\": [";
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        if (idx != 0) out << ", ";
        out << rows[idx].largest_gap;
    }
    out << "]\n";
    out << "}\n";
}

inline void export_two_phase_csv(const std::vector<PhaseTrace>& traces, std::ostream& out) {
    out << "trial_index,seed,n,ell,epsilon,t1,pre_marked_gates,n0,k_obs,lower_bound_estimate\n";
    std::uint32_t index = 1;
    for (const auto& t : traces) {
        out << index++ << ',' << t.seed << ',' << t.n << ',' << t.ell << ',' << fmt_fixed(t.epsilon)
            << ',' << t.t1 << ',' << t.pre_marked_gates << ',' << t.n0 << ',' << t.k_obs << ','
            << t.lower_bound_estimate << '\n';
    }
}

inline void export_two_phase_json(const std::vector<PhaseTrace>& traces, std::ostream& out) {
    out << "{\n  \"estimates\": [";
    for (std::size_t idx = 0; idx < traces.size(); ++idx) {
        if (idx != 0) out << ", ";
        out << traces[idx].lower_bound_estimate;
    }
    out << "],\n  \"k_obs\": [";
    for (std::size_t idx = 0; idx < traces.size(); ++idx) {
        if (idx != 0) out << ", ";
        out << traces[idx].k_obs;
    }
    out << "]\n}\n";
}

/// Writes pre-rendered content to a file; failures carry the path.
inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace gatesim

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gatesim/errors.hpp"

namespace gatesim {

/// Nearest-rank quantile: the value at rank ceil(p * N) of the sorted
/// sample (1-based), clamped to [1, N]. Exact and reproducible; no
/// interpolation.
inline std::uint32_t nearest_rank_quantile(const std::vector<std::uint32_t>& sorted, double p) {
    if (sorted.empty()) throw ConfigError("quantile of empty sample");
    const double raw = std::ceil(p * static_cast<double>(sorted.size()));
    const auto rank = static_cast<std::size_t>(std::clamp(raw, 1.0, static_cast<double>(sorted.size())));
    return sorted[rank - 1];
}

struct SummaryStats {
    double mean = 0.0;
    double median = 0.0;  // nearest-rank
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    double q05 = 0.0;
    double q95 = 0.0;
};

inline SummaryStats summarize(const std::vector<std::uint32_t>& values) {
    if (values.empty()) throw ConfigError("summary of empty sample");
    std::vector<std::uint32_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    SummaryStats stats;
    double sum = 0.0;
    for (const auto v : sorted) sum += static_cast<double>(v);
    stats.mean = sum / static_cast<double>(sorted.size());
    stats.median = static_cast<double>(nearest_rank_quantile(sorted, 0.5));
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.q05 = static_cast<double>(nearest_rank_quantile(sorted, 0.05));
    stats.q95 = static_cast<double>(nearest_rank_quantile(sorted, 0.95));
    return stats;
}

}  // namespace gatesim

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gatesim/errors.hpp"

namespace gatesim {

using NodeId = std::uint32_t;   // 1-based vertex id in [1, n]
using ListPos = std::uint32_t;  // 1-based position in a neighbor list, [1, n-1]

/// Gate positions for spacing ell on a list of n-1 neighbors:
/// {1, 1+ell, 1+2*ell, ...} intersected with [1, n-1], increasing.
inline std::vector<ListPos> gate_positions(std::uint32_t n, std::uint32_t ell) {
    if (n < 2) throw ConfigError("gate_positions: n must be >= 2, got " + std::to_string(n));
    if (ell < 1 || ell > n - 1) {
        throw ConfigError("gate_positions: ell must be in [1, n-1], got ell=" +
                          std::to_string(ell) + " for n=" + std::to_string(n));
    }
    std::vector<ListPos> positions;
    positions.reserve((n - 2) / ell + 1);
    for (ListPos p = 1; p <= n - 1; p += ell) positions.push_back(p);
    return positions;
}

/// Randomness parameter ell plus the derived admissible start positions.
/// ell must divide n (the gate model is defined that way) unless the
/// caller explicitly overrides; the override yields ceil((n-1)/ell) gates.
struct GateConfig {
    std::uint32_t ell = 1;
    std::vector<ListPos> positions;

    static GateConfig make(std::uint32_t n, std::uint32_t ell, bool allow_nondivisible = false) {
        if (n >= 2 && ell >= 1 && ell <= n - 1 && n % ell != 0 && !allow_nondivisible) {
            throw ConfigError("gate spacing " + std::to_string(ell) + " does not divide n=" +
                              std::to_string(n) + " (pass the non-divisible override to permit this)");
        }
        GateConfig cfg;
        cfg.ell = ell;
        cfg.positions = gate_positions(n, ell);
        return cfg;
    }

    std::uint32_t gate_count() const noexcept { return static_cast<std::uint32_t>(positions.size()); }
};

}  // namespace gatesim

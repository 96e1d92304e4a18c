#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "gatesim/errors.hpp"

namespace gatesim {

/// Parameters of the closed-form bounds: n nodes, gate spacing ell,
/// slack epsilon, i random markings, m pre-marked elements.
struct BoundParams {
    std::uint32_t n = 2;
    std::uint32_t ell = 1;
    double epsilon = 0.0;
    std::uint64_t i = 0;
    std::uint64_t m = 0;
};

namespace detail {

inline void check_n(std::uint32_t n, const char* where) {
    if (n < 2) throw ConfigError(std::string(where) + ": n must be >= 2, got " + std::to_string(n));
}

}  // namespace detail

/// Minimum steps the gate model needs on adversarial lists:
///   (1 - eps) * (log2 n + ln n - log2 ell - ln ell) + ell - 1.
/// Returned as a real number; rounding is the caller's concern. ell may be
/// anything in [1, n] (at ell = n the logarithm terms cancel to n - 1);
/// epsilon = 0 is admitted as the limiting value.
inline double theorem_lower_bound(std::uint32_t n, std::uint32_t ell, double epsilon) {
    detail::check_n(n, "theorem_lower_bound");
    if (ell < 1 || ell > n) {
        throw ConfigError("theorem_lower_bound: ell must be in [1, n], got " + std::to_string(ell));
    }
    if (!(epsilon >= 0.0) || epsilon >= 1.0) {
        throw ConfigError("theorem_lower_bound: epsilon must be in [0, 1)");
    }
    const double dn = static_cast<double>(n);
    const double dl = static_cast<double>(ell);
    return (1.0 - epsilon) * (std::log2(dn) + std::log(dn) - std::log2(dl) - std::log(dl)) + dl - 1.0;
}

/// Steps after which the quasi-random protocol has informed everyone on any
/// lists, leading term only: log2 n + ln n. The (1 + o(1)) factor is
/// reported as exactly 1 here.
inline double adhp_upper_bound(std::uint32_t n) {
    detail::check_n(n, "adhp_upper_bound");
    const double dn = static_cast<double>(n);
    return std::log2(dn) + std::log(dn);
}

inline constexpr double kPittelDefaultSlack = 3.0;

/// Fully-random push reference, leading term log2 n + ln n. The additive
/// O(1) is not part of the return value; comparisons use an explicit slack
/// window (default kPittelDefaultSlack) around it.
inline double pittel_reference(std::uint32_t n) {
    detail::check_n(n, "pittel_reference");
    const double dn = static_cast<double>(n);
    return std::log2(dn) + std::log(dn);
}

/// Guaranteed length of the largest unmarked interval:
///   k = (n / i) * (1 - eps) * ln n.
/// Real-valued; floor it when an integer interval length is needed.
inline double lemma_threshold(std::uint32_t n, std::uint64_t i, double epsilon) {
    detail::check_n(n, "lemma_threshold");
    if (i == 0) throw ConfigError("lemma_threshold: i must be >= 1");
    if (!(epsilon > 0.0) || epsilon >= 1.0) {
        throw ConfigError("lemma_threshold: epsilon must be in (0, 1)");
    }
    const double dn = static_cast<double>(n);
    return (dn / static_cast<double>(i)) * (1.0 - epsilon) * std::log(dn);
}

/// The marking lemma's probability bound exists in two algebraic forms that
/// disagree in the sign of the m term; both are implemented. ProofLine is
/// the quantity the derivation actually establishes and is the default.
enum class FailureBoundForm {
    ProofLine,  // exp(-1/2 * n^(eps-1) * (n/k - m))
    Statement,  // exp(-1/2 * (n^eps / k + m * n^(eps-1)))
};

/// Upper bound on the probability that NO unmarked interval of length
/// k = lemma_threshold(n, i, eps) exists, clamped to [0, 1].
inline double lemma_failure_bound(std::uint32_t n, std::uint64_t m, std::uint64_t i, double epsilon,
                                  FailureBoundForm form = FailureBoundForm::ProofLine) {
    const double k = lemma_threshold(n, i, epsilon);
    if (!(k > 0.0)) throw ConfigError("lemma_failure_bound: threshold k must be positive");
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    double exponent = 0.0;
    switch (form) {
        case FailureBoundForm::ProofLine:
            exponent = -0.5 * std::pow(dn, epsilon - 1.0) * (dn / k - dm);
            break;
        case FailureBoundForm::Statement:
            exponent = -0.5 * (std::pow(dn, epsilon) / k + dm * std::pow(dn, epsilon - 1.0));
            break;
    }
    return std::clamp(std::exp(exponent), 0.0, 1.0);
}

/// The lemma assumes i in omega(ln^2 n); as a desk-scale proxy, flag draw
/// counts below 10 * ln^2 n so callers can warn without refusing.
inline bool lemma_draws_in_regime(std::uint32_t n, std::uint64_t i) {
    const double ln_n = std::log(static_cast<double>(n));
    return static_cast<double>(i) >= 10.0 * ln_n * ln_n;
}

}  // namespace gatesim

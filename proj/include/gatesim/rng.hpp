#pragma once

#include <cstdint>

namespace gatesim {

using Seed = std::uint64_t;

/// SplitMix64 output/finalizer function (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Seed of the index-th substream of a master seed. Stateless, so substream i
/// never depends on how many other substreams exist: adding trials or nodes
/// leaves earlier streams untouched.
inline Seed substream_seed(Seed master, std::uint64_t index) noexcept {
    return mix64(master + (index + 1) * kGoldenGamma);
}

/// Domain-separation tags so the different per-trial substreams (list
/// construction, engine draws, source selection) are decorrelated even
/// though they derive from one trial seed.
inline constexpr std::uint64_t kListSeedTag = 0x6C697374732D7467ULL;
inline constexpr std::uint64_t kEngineSeedTag = 0x656E67696E652D74ULL;
inline constexpr std::uint64_t kSourceSeedTag = 0x736F757263652D74ULL;

inline Seed tagged_seed(Seed seed, std::uint64_t tag) noexcept {
    return mix64(seed ^ tag);
}

/// Small deterministic PRNG. One instance per node gives order-independent
/// per-node randomness; the whole simulation is a pure function of its seeds.
class SplitMix64 {
public:
    SplitMix64() = default;
    explicit SplitMix64(Seed seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform draw in [0, bound). Unbiased via rejection below the
    /// 2^64 mod bound threshold.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    Seed state() const noexcept { return state_; }

private:
    Seed state_ = 0;
};

}  // namespace gatesim

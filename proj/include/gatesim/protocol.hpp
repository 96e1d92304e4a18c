#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gatesim/errors.hpp"
#include "gatesim/gates.hpp"
#include "gatesim/lists.hpp"
#include "gatesim/rng.hpp"

namespace gatesim {

enum class ProtocolVariant { FullyRandom, QuasiRandom, GateModel };

/// Which push protocol a run uses. The quasi-random model is definitionally
/// the gate model with spacing 1; both resolve to the same admissible start
/// positions, so their dynamics are bit-identical under equal seeds.
class ProtocolKind {
public:
    static ProtocolKind fully_random() { return ProtocolKind(ProtocolVariant::FullyRandom, 1, false); }
    static ProtocolKind quasi_random() { return ProtocolKind(ProtocolVariant::QuasiRandom, 1, false); }
    static ProtocolKind gate_model(std::uint32_t ell, bool allow_nondivisible = false) {
        if (ell < 1) throw ConfigError("gate model: ell must be >= 1");
        return ProtocolKind(ProtocolVariant::GateModel, ell, allow_nondivisible);
    }

    ProtocolVariant variant() const noexcept { return variant_; }
    bool uses_lists() const noexcept { return variant_ != ProtocolVariant::FullyRandom; }

    /// Gate spacing; 1 for the quasi-random model, unused for fully-random.
    std::uint32_t ell() const noexcept { return ell_; }
    bool allow_nondivisible() const noexcept { return allow_nondivisible_; }

    std::string name() const {
        switch (variant_) {
            case ProtocolVariant::FullyRandom: return "push-random";
            case ProtocolVariant::QuasiRandom: return "quasi";
            case ProtocolVariant::GateModel: return "gate";
        }
        return "?";
    }

    bool operator==(const ProtocolKind&) const = default;

private:
    ProtocolKind(ProtocolVariant variant, std::uint32_t ell, bool allow)
        : variant_(variant), ell_(ell), allow_nondivisible_(allow) {}

    ProtocolVariant variant_;
    std::uint32_t ell_;
    bool allow_nondivisible_;
};

/// Snapshot of a round-synchronous run. Exactly the source is informed at
/// round 0; the informed set only grows. pointer[v-1] is the 1-based current
/// list position of an informed node, 0 while uninformed (and always 0 in
/// the fully-random model, which has no pointers).
struct EngineState {
    std::uint32_t round = 0;
    std::vector<bool> informed;            // informed[v-1]
    std::vector<ListPos> pointer;          // pointer[v-1], 0 = none
    std::vector<Seed> stream;              // stream[v-1], SplitMix64 state per node
    std::vector<NodeId> informed_order;    // nodes in the order they were informed
    std::uint32_t informed_count = 0;
};

/// Outcome of one complete broadcast: total rounds plus the per-round
/// informed-count trace (informed_counts[t] = nodes informed after round t,
/// so informed_counts[0] == 1 and the last entry == n).
struct BroadcastResult {
    std::uint32_t rounds = 0;
    std::vector<std::uint32_t> informed_counts;
    ProtocolKind protocol = ProtocolKind::quasi_random();
    Seed seed = 0;

    /// Equal dynamics: same round count and trace under the same seed,
    /// regardless of how the protocol was spelled (quasi vs gate spacing 1).
    bool same_dynamics(const BroadcastResult& other) const {
        return rounds == other.rounds && informed_counts == other.informed_counts && seed == other.seed;
    }
};

/// Safety cap on rounds; generous multiple of every bound at desk scale.
inline std::uint32_t broadcast_round_cap(std::uint32_t n, std::uint32_t ell) {
    const double cap = 64.0 * (std::log2(static_cast<double>(n)) + std::log(static_cast<double>(n)) +
                               static_cast<double>(ell));
    return static_cast<std::uint32_t>(std::ceil(cap));
}

/// Round-synchronous push engine over any NeighborLists model.
///
/// Timing convention: a node informed during round t draws its start
/// position at the end of round t (from its own substream) and sends its
/// first message in round t+1; the source draws before round 1. Each
/// informed node sends exactly one message per round; messages to already
/// informed nodes are wasted and the sender's pointer still advances.
template <NeighborLists Lists>
class BroadcastEngine {
public:
    BroadcastEngine(Lists& lists, ProtocolKind protocol, NodeId source, Seed seed)
        : lists_(lists), protocol_(protocol), seed_(seed), n_(lists.node_count()) {
        if (n_ < 2) throw ConfigError("broadcast: need at least 2 nodes");
        if (source < 1 || source > n_) {
            throw ConfigError("broadcast: source " + std::to_string(source) + " outside [1, " +
                              std::to_string(n_) + "]");
        }
        if (protocol_.uses_lists()) {
            // validates ell range and the divisibility rule
            const GateConfig gates =
                GateConfig::make(n_, protocol_.ell(), protocol_.allow_nondivisible());
            gate_count_ = gates.gate_count();
        }
        state_.informed.assign(n_, false);
        state_.pointer.assign(n_, 0);
        state_.stream.resize(n_);
        for (NodeId v = 1; v <= n_; ++v) state_.stream[v - 1] = substream_seed(seed, v);
        state_.informed[source - 1] = true;
        state_.informed_order.push_back(source);
        state_.informed_count = 1;
        if (protocol_.uses_lists()) state_.pointer[source - 1] = draw_start_position(source);
    }

    const EngineState& state() const noexcept { return state_; }
    std::uint32_t node_count() const noexcept { return n_; }
    bool complete() const noexcept { return state_.informed_count == n_; }

    /// Advances one synchronous round; no-op once everyone is informed.
    void step() {
        if (complete()) return;
        const std::uint32_t senders = state_.informed_count;
        for (std::uint32_t idx = 0; idx < senders; ++idx) {
            const NodeId v = state_.informed_order[idx];
            const NodeId target = next_target(v);
            if (!state_.informed[target - 1]) {
                state_.informed[target - 1] = true;
                state_.informed_order.push_back(target);
            }
        }
        state_.round += 1;
        // newly informed nodes draw their start position at end of round
        const auto total = static_cast<std::uint32_t>(state_.informed_order.size());
        if (protocol_.uses_lists()) {
            for (std::uint32_t idx = senders; idx < total; ++idx) {
                const NodeId w = state_.informed_order[idx];
                state_.pointer[w - 1] = draw_start_position(w);
            }
        }
        state_.informed_count = total;
    }

    /// Runs to full coverage and returns the round count and trace.
    BroadcastResult run() {
        BroadcastResult result;
        result.protocol = protocol_;
        result.seed = seed_;
        result.informed_counts.push_back(state_.informed_count);
        const std::uint32_t cap = broadcast_round_cap(n_, protocol_.uses_lists() ? protocol_.ell() : 1);
        while (!complete()) {
            if (state_.round >= cap) {
                throw RunawayError("broadcast exceeded the round cap of " + std::to_string(cap) +
                                   " at n=" + std::to_string(n_));
            }
            const std::uint32_t before = state_.informed_count;
            step();
            assert(state_.informed_count <= 2 * before);  // push: at most doubles
            (void)before;
            result.informed_counts.push_back(state_.informed_count);
        }
        result.rounds = state_.round;
        return result;
    }

private:
    NodeId next_target(NodeId v) {
        if (protocol_.variant() == ProtocolVariant::FullyRandom) {
            SplitMix64 rng(state_.stream[v - 1]);
            const auto rank = static_cast<std::uint32_t>(rng.next_below(n_ - 1)) + 1;
            state_.stream[v - 1] = rng.state();
            return neighbor_rank_to_id(v, rank);
        }
        const ListPos p = state_.pointer[v - 1];
        const NodeId target = lists_.neighbor(v, p);
        state_.pointer[v - 1] = p % (n_ - 1) + 1;  // cyclic advance
        return target;
    }

    ListPos draw_start_position(NodeId v) {
        SplitMix64 rng(state_.stream[v - 1]);
        const auto gate = static_cast<std::uint32_t>(rng.next_below(gate_count_));
        state_.stream[v - 1] = rng.state();
        return 1 + gate * protocol_.ell();
    }

    Lists& lists_;
    ProtocolKind protocol_;
    Seed seed_;
    std::uint32_t n_;
    std::uint32_t gate_count_ = 0;
    EngineState state_;
};

template <NeighborLists Lists>
EngineState init_state(Lists& lists, ProtocolKind protocol, NodeId source, Seed seed) {
    return BroadcastEngine<Lists>(lists, protocol, source, seed).state();
}

template <NeighborLists Lists>
BroadcastResult run_broadcast(Lists& lists, ProtocolKind protocol, NodeId source, Seed seed) {
    return BroadcastEngine<Lists>(lists, protocol, source, seed).run();
}

}  // namespace gatesim

#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gatesim/errors.hpp"
#include "gatesim/gates.hpp"
#include "gatesim/rng.hpp"

namespace gatesim {

/// Anything the broadcast engine can read neighbor lists from. neighbor() is
/// allowed to mutate (lazily sampled families reveal entries on first access).
template <class L>
concept NeighborLists = requires(L& lists, const L& clists, NodeId v, ListPos p) {
    { clists.node_count() } -> std::convertible_to<std::uint32_t>;
    { lists.neighbor(v, p) } -> std::convertible_to<NodeId>;
};

/// Explicit per-node cyclic neighbor lists for the complete graph on n nodes.
/// Node v's list is an ordered permutation of {1..n} \ {v}, positions 1..n-1.
class ListFamily {
public:
    ListFamily() = default;
    ListFamily(std::uint32_t n, std::vector<std::vector<NodeId>> lists)
        : n_(n), lists_(std::move(lists)) {}

    std::uint32_t node_count() const noexcept { return n_; }

    NodeId neighbor(NodeId v, ListPos p) const { return lists_[v - 1][p - 1]; }

    const std::vector<NodeId>& list_of(NodeId v) const { return lists_[v - 1]; }

    const std::vector<std::vector<NodeId>>& lists() const noexcept { return lists_; }

    bool operator==(const ListFamily& other) const = default;

private:
    std::uint32_t n_ = 0;
    std::vector<std::vector<NodeId>> lists_;
};

/// First invariant violation found in a family. position is the 1-based list
/// position involved, or 0 for whole-list problems (wrong length).
struct ListViolation {
    NodeId node = 0;
    ListPos position = 0;
    std::string message;
};

/// Checks every ListFamily invariant: list count, per-list length n-1,
/// id range, self-inclusion, duplicates. Returns the first violation or
/// nullopt when the family is valid.
inline std::optional<ListViolation> validate_lists(const ListFamily& family) {
    const std::uint32_t n = family.node_count();
    if (n < 2) return ListViolation{0, 0, "node count must be >= 2"};
    if (family.lists().size() != n) {
        return ListViolation{0, 0, "expected " + std::to_string(n) + " lists, found " +
                                       std::to_string(family.lists().size())};
    }
    std::vector<ListPos> seen_at(n + 1);  // position at which an id was seen, per node scan
    for (NodeId v = 1; v <= n; ++v) {
        const auto& list = family.list_of(v);
        if (list.size() != n - 1) {
            return ListViolation{v, 0, "wrong length: expected " + std::to_string(n - 1) +
                                           ", found " + std::to_string(list.size())};
        }
        std::fill(seen_at.begin(), seen_at.end(), 0);
        for (ListPos p = 1; p <= n - 1; ++p) {
            const NodeId id = list[p - 1];
            if (id < 1 || id > n) {
                return ListViolation{v, p, "id " + std::to_string(id) + " out of range [1, " +
                                               std::to_string(n) + "]"};
            }
            if (id == v) return ListViolation{v, p, "self-inclusion"};
            if (seen_at[id] != 0) {
                return ListViolation{v, p, "duplicate id " + std::to_string(id) +
                                               " (first at position " + std::to_string(seen_at[id]) + ")"};
            }
            seen_at[id] = p;
        }
        // length n-1, no self, no duplicates, all in range => permutation of the neighbors
    }
    return std::nullopt;
}

/// The lower-bound construction: every node's list is [1, 2, ..., n] with the
/// node itself removed, ascending order preserved.
inline ListFamily build_adversarial_lists(std::uint32_t n) {
    if (n < 2) throw ConfigError("build_adversarial_lists: n must be >= 2, got " + std::to_string(n));
    std::vector<std::vector<NodeId>> lists(n);
    for (NodeId v = 1; v <= n; ++v) {
        auto& list = lists[v - 1];
        list.reserve(n - 1);
        for (NodeId u = 1; u <= n; ++u) {
            if (u != v) list.push_back(u);
        }
    }
    return ListFamily(n, std::move(lists));
}

/// Maps a neighbor rank in [1, n-1] to the id of node v's rank-th neighbor
/// in ascending order (skipping v itself).
inline NodeId neighbor_rank_to_id(NodeId v, std::uint32_t rank) noexcept {
    return rank + (rank >= v ? 1 : 0);
}

/// Independent uniform permutation per node, Fisher-Yates over each node's
/// own substream so the family is a pure function of (n, seed).
inline ListFamily build_random_lists(std::uint32_t n, Seed seed) {
    if (n < 2) throw ConfigError("build_random_lists: n must be >= 2, got " + std::to_string(n));
    std::vector<std::vector<NodeId>> lists(n);
    for (NodeId v = 1; v <= n; ++v) {
        SplitMix64 rng(substream_seed(seed, v));
        auto& list = lists[v - 1];
        list.resize(n - 1);
        for (std::uint32_t r = 1; r <= n - 1; ++r) list[r - 1] = neighbor_rank_to_id(v, r);
        for (std::uint32_t i = n - 1; i > 1; --i) {
            const auto j = static_cast<std::uint32_t>(rng.next_below(i));
            std::swap(list[i - 1], list[j]);
        }
    }
    return ListFamily(n, std::move(lists));
}

/// Implicit adversarial family: neighbor lookups are O(1) arithmetic, so runs
/// at n = 2^16 and beyond never materialize the ~n^2 entries.
class AdversarialLists {
public:
    explicit AdversarialLists(std::uint32_t n) : n_(n) {
        if (n < 2) throw ConfigError("AdversarialLists: n must be >= 2, got " + std::to_string(n));
    }

    std::uint32_t node_count() const noexcept { return n_; }

    NodeId neighbor(NodeId v, ListPos p) const noexcept { return neighbor_rank_to_id(v, p); }

private:
    std::uint32_t n_;
};

/// Uniformly random family sampled lazily: entries are revealed on first
/// access by drawing without replacement from the node's remaining
/// neighbors (sparse Fisher-Yates). Revealing on demand has the same
/// distribution as sampling the full permutation up front, and a broadcast
/// run touches only O(rounds) entries per node, so random-list runs stay
/// cheap at large n.
///
/// Reveals are anchored at the node's first queried position and stored in
/// cyclic access order, which is O(1) per query for the engine's sequential
/// pointer walk; a query that jumps ahead reveals the skipped stretch too
/// (the permutation's law does not depend on reveal order).
///
/// Note: for equal seeds this family and build_random_lists() are equal in
/// distribution but not entry-for-entry, because reveal order differs.
class LazyRandomLists {
public:
    LazyRandomLists(std::uint32_t n, Seed seed) : n_(n), nodes_(n) {
        if (n < 2) throw ConfigError("LazyRandomLists: n must be >= 2, got " + std::to_string(n));
        for (NodeId v = 1; v <= n; ++v) nodes_[v - 1].rng = SplitMix64(substream_seed(seed, v));
    }

    std::uint32_t node_count() const noexcept { return n_; }

    NodeId neighbor(NodeId v, ListPos p) {
        NodeState& node = nodes_[v - 1];
        if (node.values.empty()) node.anchor = p;
        const std::uint32_t offset = (p + (n_ - 1) - node.anchor) % (n_ - 1);
        while (node.values.size() <= offset) {
            node.values.push_back(neighbor_rank_to_id(v, draw_rank(node) + 1));
        }
        return node.values[offset];
    }

private:
    struct NodeState {
        SplitMix64 rng;
        ListPos anchor = 0;
        std::vector<NodeId> values;                                   // cyclic order from anchor
        std::vector<std::pair<std::uint32_t, std::uint32_t>> moved;   // pool index -> 0-based rank
    };

    /// One draw of the sparse Fisher-Yates pool over ranks 0..n-2.
    std::uint32_t draw_rank(NodeState& node) {
        const auto drawn = static_cast<std::uint32_t>(node.values.size());
        const std::uint32_t remaining = (n_ - 1) - drawn;
        const auto j = static_cast<std::uint32_t>(node.rng.next_below(remaining));
        const std::uint32_t rank = pool_value(node, j);
        const std::uint32_t last = pool_value(node, remaining - 1);
        // the last slot leaves the pool; drop its override
        for (std::size_t idx = 0; idx < node.moved.size(); ++idx) {
            if (node.moved[idx].first == remaining - 1) {
                node.moved[idx] = node.moved.back();
                node.moved.pop_back();
                break;
            }
        }
        if (j != remaining - 1) {
            bool replaced = false;
            for (auto& entry : node.moved) {
                if (entry.first == j) {
                    entry.second = last;
                    replaced = true;
                    break;
                }
            }
            if (!replaced) node.moved.emplace_back(j, last);
        }
        return rank;
    }

    static std::uint32_t pool_value(const NodeState& node, std::uint32_t index) {
        for (const auto& entry : node.moved) {
            if (entry.first == index) return entry.second;
        }
        return index;
    }

    std::uint32_t n_;
    std::vector<NodeState> nodes_;
};

static_assert(NeighborLists<ListFamily>);
static_assert(NeighborLists<AdversarialLists>);
static_assert(NeighborLists<LazyRandomLists>);

}  // namespace gatesim

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "gatesim/marking.hpp"
#include "gatesim/rng.hpp"

using namespace gatesim;

TEST_CASE("largest unmarked interval on hand-checked sequences") {
    REQUIRE(largest_unmarked_interval({false, false, false}) == 3);
    REQUIRE(largest_unmarked_interval({true, true, true}) == 0);
    REQUIRE(largest_unmarked_interval({false, true, false, false, true, false, false, false}) == 3);
    REQUIRE(largest_unmarked_interval({true}) == 0);
    REQUIRE(largest_unmarked_interval({false}) == 1);
}

TEST_CASE("empty sequences are rejected") {
    REQUIRE_THROWS_AS(largest_unmarked_interval({}), ConfigError);
}

TEST_CASE("gap never exceeds n minus the number of marked positions") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::uint32_t>(rng.next_below(60)) + 1;
        std::vector<bool> marks(n);
        std::uint32_t marked = 0;
        for (std::uint32_t p = 0; p < n; ++p) {
            marks[p] = rng.next_below(3) == 0;
            marked += marks[p] ? 1 : 0;
        }
        const std::uint32_t gap = largest_unmarked_interval(marks);
        if (marked == 0) {
            REQUIRE(gap == n);
        } else {
            REQUIRE(gap <= n - marked);
        }
    }
}

TEST_CASE("marking with no draws is deterministic and seed-independent") {
    const MarkingOutcome a = run_marking_experiment({5, {1}, 0, 7});
    const MarkingOutcome b = run_marking_experiment({5, {1}, 0, 991237});
    REQUIRE(a.largest_gap == 4);
    REQUIRE(b.largest_gap == 4);
    REQUIRE(a.marks == b.marks);
    REQUIRE(a.distinct_random_marks == 0);

    const MarkingOutcome empty = run_marking_experiment({4, {}, 0, 0});
    REQUIRE(empty.largest_gap == 4);
}

TEST_CASE("draws are reproducible under a fixed seed") {
    const MarkingOutcome a = run_marking_experiment({100, {3, 50}, 40, 21});
    const MarkingOutcome b = run_marking_experiment({100, {3, 50}, 40, 21});
    REQUIRE(a.marks == b.marks);
    REQUIRE(a.largest_gap == b.largest_gap);
    REQUIRE(a.distinct_random_marks == b.distinct_random_marks);
}

TEST_CASE("distinct random marks never exceed min(i, n)") {
    for (Seed seed = 0; seed < 20; ++seed) {
        const MarkingOutcome out = run_marking_experiment({10, {}, 25, seed});
        REQUIRE(out.distinct_random_marks <= 10);
        const MarkingOutcome few = run_marking_experiment({100, {}, 5, seed});
        REQUIRE(few.distinct_random_marks <= 5);
        REQUIRE(few.distinct_random_marks >= 1);
    }
}

TEST_CASE("everything marked means gap zero") {
    const MarkingOutcome out = run_marking_experiment({3, {1, 2, 3}, 0, 0});
    REQUIRE(out.largest_gap == 0);
}

TEST_CASE("pre-marked positions outside the sequence are rejected") {
    REQUIRE_THROWS_AS(run_marking_experiment({5, {6}, 0, 0}), ConfigError);
    REQUIRE_THROWS_AS(run_marking_experiment({5, {0}, 0, 0}), ConfigError);
}

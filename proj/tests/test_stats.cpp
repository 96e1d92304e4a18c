#include <catch2/catch_amalgamated.hpp>

#include "gatesim/stats.hpp"

using namespace gatesim;
using Catch::Approx;

TEST_CASE("nearest-rank quantiles on a small sorted sample") {
    const std::vector<std::uint32_t> sorted{10, 20, 30, 40};
    REQUIRE(nearest_rank_quantile(sorted, 0.5) == 20);   // rank ceil(2) = 2
    REQUIRE(nearest_rank_quantile(sorted, 0.05) == 10);  // rank ceil(0.2) -> 1
    REQUIRE(nearest_rank_quantile(sorted, 0.95) == 40);  // rank ceil(3.8) = 4
    REQUIRE(nearest_rank_quantile(sorted, 1.0) == 40);
    REQUIRE(nearest_rank_quantile(sorted, 0.0) == 10);   // clamped to rank 1
}

TEST_CASE("summary of a singleton collapses") {
    const SummaryStats stats = summarize({7});
    REQUIRE(stats.mean == 7.0);
    REQUIRE(stats.median == 7.0);
    REQUIRE(stats.min == 7);
    REQUIRE(stats.max == 7);
    REQUIRE(stats.q05 == 7.0);
    REQUIRE(stats.q95 == 7.0);
}

TEST_CASE("summary of an unsorted sample") {
    const SummaryStats stats = summarize({5, 1, 4, 2, 3});
    REQUIRE(stats.mean == Approx(3.0));
    REQUIRE(stats.median == 3.0);  // rank ceil(2.5) = 3
    REQUIRE(stats.min == 1);
    REQUIRE(stats.max == 5);
    REQUIRE(stats.q05 == 1.0);
    REQUIRE(stats.q95 == 5.0);
}

TEST_CASE("empty samples are rejected") {
    REQUIRE_THROWS_AS(summarize({}), ConfigError);
    REQUIRE_THROWS_AS(nearest_rank_quantile({}, 0.5), ConfigError);
}

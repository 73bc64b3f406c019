#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rainbow/diam2.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= k; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

}  // namespace

TEST(RestrictedGrowth, CountMatchesStirlingSums) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::size_t c = 1; c <= 6; ++c) {
      std::uint64_t expect = 0;
      for (std::size_t j = 1; j <= c; ++j) expect += stirling2(len, j);
      EXPECT_EQ(restricted_growth_count(len, c), expect) << len << " " << c;
    }
  }
}

TEST(RestrictedGrowth, EnumerationIsCanonicalAndComplete) {
  std::uint64_t seen = 0;
  std::vector<std::uint8_t> prev;
  for_each_restricted_growth(7, 3, [&](std::span<const std::uint8_t> s) {
    std::uint8_t top = 0;
    EXPECT_EQ(s[0], 0);
    for (std::uint8_t x : s) {
      EXPECT_LE(x, top + 1);
      EXPECT_LT(x, 3);
      top = std::max(top, x);
    }
    std::vector<std::uint8_t> cur(s.begin(), s.end());
    if (!prev.empty()) EXPECT_LT(prev, cur);
    prev = cur;
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, restricted_growth_count(7, 3));
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(rc_lower_bound(gen::cycle(6)), 3u);
  EXPECT_EQ(rc_lower_bound(gen::star(4)), 4u);
  EXPECT_EQ(rc_lower_bound(gen::petersen()), 2u);
  EXPECT_THROW(rc_lower_bound(Graph::from_edges(4, {{0, 1}, {2, 3}})), Error);
}

TEST(Exact, Examples) {
  auto c6 = exact_rc(gen::cycle(6));
  EXPECT_TRUE(c6.exact());
  EXPECT_EQ(c6.value(), 3u);
  EXPECT_EQ(exact_rc(gen::complete_bipartite(2, 5)).value(), 3u);
  // The bridged construction uses k + 2 = 4 colors here, but three suffice;
  // the brute-force oracle agrees.
  Graph t22 = gen::tight_example(2, 2);
  EXPECT_EQ(exact_rc(t22).value(), 3u);
  EXPECT_EQ(oracle::rc(t22), 3u);
  EXPECT_EQ(exact_rc(gen::tight_example(1, 2)).value(), 3u);
}

TEST(Exact, Formulas) {
  for (std::size_t n = 4; n <= 7; ++n) EXPECT_EQ(exact_rc(gen::cycle(n)).value(), (n + 1) / 2);
  for (std::size_t t = 2; t <= 5; ++t) {
    auto expect = std::min<std::size_t>(static_cast<std::size_t>(std::ceil(std::sqrt(double(t)) - 1e-9)), 4);
    EXPECT_EQ(exact_rc(gen::complete_bipartite(2, t)).value(), expect);
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& tree : gen::all_labeled_trees(n)) EXPECT_EQ(exact_rc(tree).value(), tree.size());
  }
}

TEST(Exact, MatchesBruteForceOnSmallGraphs) {
  SplitMix64 rng(17);
  int compared = 0;
  while (compared < 60) {
    Graph g = oracle::connected_gnp(3 + rng.below(4), 0.5, rng);
    if (g.size() > 7) continue;
    auto r = exact_rc(g);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(r.value(), oracle::rc(g));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->colors_used(), r.value());
    EXPECT_TRUE(verify_rainbow_connected(g, *r.witness).connected);
    ++compared;
  }
}

TEST(Exact, Sandwich) {
  SplitMix64 rng(23);
  for (int i = 0; i < 40; ++i) {
    Graph g = oracle::connected_gnp(4 + rng.below(6), 0.5, rng);
    auto r = exact_rc(g, {.budget = 200'000});
    EXPECT_LE(rc_lower_bound(g), r.lower);
    EXPECT_LE(r.lower, r.upper);
    if (r.witness) EXPECT_TRUE(verify_rainbow_connected(g, *r.witness).connected);
  }
}

TEST(Exact, BoundsWhenBudgetOrSizeExceeded) {
  Graph pet = gen::petersen();
  auto tiny = exact_rc(pet, {.budget = 10});
  EXPECT_FALSE(tiny.exact());
  EXPECT_TRUE(tiny.budget_exhausted);
  EXPECT_EQ(tiny.lower, 2u);
  EXPECT_EQ(tiny.upper, color_diam2(pet).colors_used);

  Graph big = gen::cycle(30);
  auto r = exact_rc(big);
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.colorings_tested, 0u);
  EXPECT_EQ(r.lower, 15u);
  EXPECT_EQ(r.upper, 30u);
  EXPECT_THROW(exact_rc(Graph::from_edges(4, {{0, 1}, {2, 3}})), Error);
}

TEST(Exact, SerialAndParallelAgree) {
  SplitMix64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Graph g = oracle::connected_gnp(5 + rng.below(4), 0.5, rng);
    for (std::size_t c = 2; c <= 3; ++c) {
      auto a = search_coloring(g, c, 5'000'000, false);
      auto b = search_coloring(g, c, 5'000'000, true);
      EXPECT_EQ(a.has_value(), b.has_value());
      if (a && b) EXPECT_EQ(*a, *b);
    }
    EXPECT_EQ(exact_rc(g, {.parallel = false}).witness, exact_rc(g, {.parallel = true}).witness);
  }
}

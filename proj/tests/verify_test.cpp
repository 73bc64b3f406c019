#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

// Colors the cycle's edges by walking 0-1-2-...-0 with the given pattern.
EdgeColoring cycle_coloring(const Graph& g, const std::vector<Color>& around) {
  std::vector<Color> colors(g.size());
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    colors[*g.edge_id(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n))] = around[i];
  }
  return EdgeColoring(g, colors);
}

}  // namespace

TEST(Verify, Examples) {
  Graph k4 = gen::complete(4);
  EXPECT_TRUE(verify_rainbow_connected(k4, EdgeColoring::uniform(k4)).connected);

  Graph c4 = gen::cycle(4);
  EXPECT_TRUE(verify_rainbow_connected(c4, cycle_coloring(c4, {1, 2, 1, 2})).connected);
  auto bad = verify_rainbow_connected(c4, EdgeColoring::uniform(c4));
  EXPECT_FALSE(bad.connected);
  ASSERT_TRUE(bad.failing_pair);
  EXPECT_EQ(*bad.failing_pair, (VertexPair{0, 2}));
}

TEST(Verify, RainbowPathExamples) {
  Graph k2 = gen::complete(2);
  EXPECT_EQ(rainbow_path(k2, EdgeColoring::uniform(k2), 0, 1), (Path{0, 1}));
  Graph c4 = gen::cycle(4);
  EXPECT_FALSE(rainbow_path(c4, EdgeColoring::uniform(c4), 0, 2).has_value());
  Graph c6 = gen::cycle(6);
  auto col = cycle_coloring(c6, {1, 2, 3, 1, 2, 3});
  auto p = rainbow_path(c6, col, 0, 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->size(), 4u);
  EXPECT_TRUE(is_rainbow_path(c6, col, *p, 0, 3));
}

TEST(Verify, Errors) {
  Graph c4 = gen::cycle(4);
  Graph c5 = gen::cycle(5);
  EXPECT_THROW(verify_rainbow_connected(c4, EdgeColoring::uniform(c5)), Error);
  Graph k7 = gen::complete(7);
  std::vector<Color> colors(k7.size());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(1 + i % 18);
  try {
    verify_rainbow_connected(k7, EdgeColoring(k7, colors));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  // All-distinct colorings take the connectivity fast path regardless of the cap.
  EXPECT_TRUE(verify_rainbow_connected(k7, EdgeColoring::all_distinct(k7)).connected);
}

TEST(Verify, MatchesSimplePathOracle) {
  SplitMix64 rng(31337);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::connected_gnp(2 + rng.below(6), 0.5, rng);
    for (int j = 0; j < 10; ++j) {
      auto col = oracle::random_coloring(g, 1 + rng.below(4), rng);
      auto cert = verify_rainbow_connected(g, col, {.witnesses = true});
      EXPECT_EQ(cert.connected, oracle::rainbow_connected(g, col));
      if (cert.connected) EXPECT_TRUE(certificate_valid(g, col, cert));
      std::size_t failing = 0;
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w) failing += !oracle::rainbow_pair(g, col, u, w);
      EXPECT_EQ(count_failing_pairs(g, col), failing);
      if (!cert.connected) {
        auto [u, w] = *cert.failing_pair;
        EXPECT_FALSE(oracle::rainbow_pair(g, col, u, w));
      }
    }
  }
}

TEST(Verify, LargeGraphsUseStateSearch) {
  // n > 64 forces the general search.
  Graph c80 = gen::cycle(80);
  std::vector<Color> around(80);
  for (std::size_t i = 0; i < 80; ++i) around[i] = static_cast<Color>(1 + i % 3);
  auto col = cycle_coloring(c80, around);
  auto cert = verify_rainbow_connected(c80, col);
  EXPECT_FALSE(cert.connected);
  EXPECT_EQ(cert.failing_pair, (VertexPair{0, 4}));
}

TEST(Verify, MonotoneUnderColorSplitting) {
  // Giving one color class a fresh color never breaks rainbow connectivity.
  SplitMix64 rng(8);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::connected_gnp(3 + rng.below(5), 0.5, rng);
    auto col = oracle::random_coloring(g, 3, rng);
    bool before = verify_rainbow_connected(g, col).connected;
    std::vector<Color> split = col.colors();
    split[rng.below(split.size())] = 4;
    bool after = verify_rainbow_connected(g, EdgeColoring(g, split, 4)).connected;
    EXPECT_TRUE(!before || after);
  }
}

TEST(Verify, SerialAndParallelAgree) {
  SplitMix64 rng(99);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::connected_gnp(4 + rng.below(12), 0.3, rng);
    auto col = oracle::random_coloring(g, 2 + rng.below(4), rng);
    auto a = verify_rainbow_connected(g, col, {.witnesses = true, .parallel = false});
    auto b = verify_rainbow_connected(g, col, {.witnesses = true, .parallel = true});
    EXPECT_EQ(a.connected, b.connected);
    EXPECT_EQ(a.failing_pair, b.failing_pair);
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
}

TEST(Verify, WitnessesAreShortest) {
  Graph pet = gen::petersen();
  auto col = EdgeColoring::all_distinct(pet);
  auto cert = verify_rainbow_connected(pet, col, {.witnesses = true});
  ASSERT_TRUE(cert.connected);
  for (Vertex u = 0; u < 10; ++u) {
    auto b = bfs_layers(pet, u);
    for (Vertex w = u + 1; w < 10; ++w) EXPECT_EQ(cert.witness(u, w).size(), b.dist[w] + 1);
  }
}

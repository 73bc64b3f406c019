#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

TEST(Generators, FixedFamilies) {
  EXPECT_EQ(gen::cycle(4).size(), 4u);
  EXPECT_EQ(diameter(gen::cycle(4)), 2u);
  Graph k23 = gen::complete_bipartite(2, 3);
  EXPECT_EQ(k23.size(), 6u);
  EXPECT_EQ(diameter(k23), 2u);
  EXPECT_EQ(srg_parameters(gen::petersen()), (SrgParameters{10, 3, 0, 1}));
  EXPECT_EQ(gen::complete(6).size(), 15u);
  EXPECT_EQ(gen::star(4).degree(0), 4u);
  Graph w = gen::wheel(5);
  EXPECT_EQ(w.degree(5), 5u);
  EXPECT_EQ(w.size(), 10u);
  EXPECT_EQ(gen::path(4).size(), 3u);
  Graph f = gen::friendship(3);
  EXPECT_EQ(f.order(), 7u);
  EXPECT_EQ(f.size(), 9u);
}

TEST(Generators, TightExample) {
  Graph t12 = gen::tight_example(1, 2);
  EXPECT_EQ(t12.order(), 6u);
  EXPECT_EQ(t12.size(), 7u);
  EXPECT_EQ(bridges(t12).size(), 1u);
  Graph t22 = gen::tight_example(2, 2);
  EXPECT_EQ(t22.order(), 7u);
  EXPECT_EQ(t22.size(), 8u);
  EXPECT_EQ(bridges(t22).size(), 2u);
  try {
    gen::tight_example(1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
  EXPECT_THROW(gen::cycle(2), Error);
  EXPECT_THROW(gen::complete_bipartite(0, 3), Error);
}

TEST(Generators, RandomDiam2) {
  auto a = gen::random_diam2({.n = 20, .p = 0.4, .seed = 1, .require_bridgeless = true});
  EXPECT_EQ(diameter(a.graph), 2u);
  EXPECT_TRUE(bridges(a.graph).empty());
  auto b = gen::random_diam2({.n = 10, .p = 0.5, .seed = 42, .require_two_connected = true});
  EXPECT_TRUE(is_two_connected(b.graph));
  EXPECT_EQ(diameter(b.graph), 2u);
  // Near-complete samples rarely have diameter 2.
  try {
    EXPECT_EQ(diameter(gen::random_diam2({.n = 4, .p = 0.99, .seed = 7, .max_tries = 50}).graph), 2u);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenerationFailed);
  }
  try {
    gen::random_diam2({.n = 3, .p = 0.999, .seed = 7, .max_tries = 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenerationFailed);
  }
}

TEST(Generators, RandomIsSeedDeterministic) {
  gen::RandomSpec spec{.n = 15, .p = 0.4, .seed = 99};
  EXPECT_EQ(gen::random_diam2(spec).graph, gen::random_diam2(spec).graph);
  spec.seed = 100;
  EXPECT_EQ(gen::random_cut_vertex_bridgeless(spec).graph, gen::random_cut_vertex_bridgeless(spec).graph);
}

TEST(Generators, CutVertexSamplesHaveOneCutVertex) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen::random_cut_vertex_bridgeless({.n = 5 + seed % 25, .p = 0.5, .seed = seed}).graph;
    EXPECT_EQ(diameter(g), 2u);
    EXPECT_TRUE(oracle::bridges(g).empty());
    EXPECT_EQ(oracle::cut_vertices(g), std::vector<Vertex>{0});
  }
}

TEST(Generators, AllLabeledTrees) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto trees = gen::all_labeled_trees(n);
    std::size_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    EXPECT_EQ(trees.size(), cayley);
    std::set<std::vector<Edge>> distinct;
    for (const Graph& t : trees) {
      EXPECT_EQ(t.size(), n - 1);
      EXPECT_TRUE(is_connected(t));
      distinct.insert(t.edges());
    }
    EXPECT_EQ(distinct.size(), cayley);
  }
}

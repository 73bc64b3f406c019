#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::gen {

// Labelings:
//   cycle(n):                 i ~ i+1 (mod n)
//   complete_bipartite(s, t): side A = 0..s-1, side B = s..s+t-1
//   star(leaves):             center 0, leaves 1..leaves
//   petersen():               outer 0-4, inner 5-9, spokes i ~ i+5,
//                             inner chords (5+i) ~ (5+(i+2) mod 5)
//   wheel(rim):               rim 0..rim-1 as a cycle, hub = rim
//   tight_example(k, r):      apex 0, pendants 1..k, pairs (k+1+2j, k+2+2j)
//   friendship(t):            center 0, triangles (0, 2j+1, 2j+2)
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph star(std::size_t leaves);
Graph petersen();
Graph wheel(std::size_t rim);
Graph path(std::size_t n);

/// Apex joined to k isolated vertices and to both ends of r disjoint edges.
/// Needs k >= 1 and r >= 2.
Graph tight_example(std::size_t k, std::size_t r);

/// t triangles sharing one vertex; t >= 2.
Graph friendship(std::size_t t);

struct RandomSpec {
  std::size_t n = 10;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t max_tries = 10'000;
  bool require_bridgeless = false;
  bool require_two_connected = false;
};

struct Generated {
  Graph graph;
  std::size_t tries = 0;
};

/// Rejection-samples G(n, p) from a SplitMix64 stream seeded with `seed` until
/// the sample has diameter exactly 2 and meets the structural flags. Throws
/// GenerationFailed after max_tries samples.
Generated random_diam2(const RandomSpec& spec);

/// Apex 0 joined to every other vertex. The rest is split at random into at
/// least two blocks of size >= 2, each a connected G(size, p) sample. The
/// result is bridgeless with exactly one cut vertex.
Generated random_cut_vertex_bridgeless(const RandomSpec& spec);

/// Every labeled tree on n >= 2 vertices, decoded from all Prüfer sequences.
std::vector<Graph> all_labeled_trees(std::size_t n);

}  // namespace rainbow::gen

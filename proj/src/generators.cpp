#include "rainbow/generators.hpp"

#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow::gen {
namespace {

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, what);
}

Graph sample_gnp(std::size_t n, double p, SplitMix64& rng) {
  std::vector<VertexPair> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) edges.emplace_back(vx(a), vx(b));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vx(i), vx((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(vx(i), vx(i + 1));
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<VertexPair> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(vx(a), vx(b));
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t s, std::size_t t) {
  require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1");
  std::vector<VertexPair> edges;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < t; ++b) edges.emplace_back(vx(a), vx(s + b));
  }
  return Graph::from_edges(s + t, edges);
}

Graph star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph petersen() {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(vx(i), vx((i + 1) % 5));
    edges.emplace_back(vx(i), vx(i + 5));
    edges.emplace_back(vx(5 + i), vx(5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, edges);
}

Graph wheel(std::size_t rim) {
  require(rim >= 3, "wheel needs rim >= 3");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < rim; ++i) {
    edges.emplace_back(vx(i), vx((i + 1) % rim));
    edges.emplace_back(vx(i), vx(rim));
  }
  return Graph::from_edges(rim + 1, edges);
}

Graph tight_example(std::size_t k, std::size_t r) {
  require(k >= 1, "tight example needs k >= 1");
  require(r >= 2, "tight example needs r >= 2");
  const std::size_t n = 1 + k + 2 * r;
  std::vector<VertexPair> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, vx(i));
  for (std::size_t j = 0; j < r; ++j) edges.emplace_back(vx(k + 1 + 2 * j), vx(k + 2 + 2 * j));
  return Graph::from_edges(n, edges);
}

Graph friendship(std::size_t t) {
  require(t >= 2, "friendship graph needs t >= 2");
  std::vector<VertexPair> edges;
  for (std::size_t j = 0; j < t; ++j) {
    edges.emplace_back(0, vx(2 * j + 1));
    edges.emplace_back(0, vx(2 * j + 2));
    edges.emplace_back(vx(2 * j + 1), vx(2 * j + 2));
  }
  return Graph::from_edges(2 * t + 1, edges);
}

Generated random_diam2(const RandomSpec& spec) {
  require(spec.n >= 3, "random_diam2 needs n >= 3");
  require(spec.p > 0.0 && spec.p < 1.0, "random_diam2 needs 0 < p < 1");
  SplitMix64 rng(spec.seed);
  for (std::size_t attempt = 1; attempt <= spec.max_tries; ++attempt) {
    Graph g = sample_gnp(spec.n, spec.p, rng);
    auto d = diameter(g);
    if (!d || *d != 2) continue;
    if (spec.require_bridgeless && !bridges(g).empty()) continue;
    if (spec.require_two_connected && !is_two_connected(g)) continue;
    return {std::move(g), attempt};
  }
  throw Error(ErrorCode::GenerationFailed,
              "no diameter-2 sample in " + std::to_string(spec.max_tries) + " tries (n=" + std::to_string(spec.n) + ")");
}

Generated random_cut_vertex_bridgeless(const RandomSpec& spec) {
  require(spec.n >= 5, "cut-vertex sampler needs n >= 5");
  require(spec.p > 0.0 && spec.p < 1.0, "cut-vertex sampler needs 0 < p < 1");
  SplitMix64 rng(spec.seed);
  const std::size_t rest_n = spec.n - 1;
  for (std::size_t attempt = 1; attempt <= spec.max_tries; ++attempt) {
    // Split the non-apex vertices into 2..rest_n/2 blocks of size >= 2, then
    // keep the sample only if every block's G(size, p) is connected.
    const std::size_t blocks = 2 + rng.below(rest_n / 2 - 1);
    std::vector<std::size_t> sizes(blocks, 2);
    for (std::size_t extra = rest_n - 2 * blocks; extra > 0; --extra) ++sizes[rng.below(blocks)];
    std::vector<Vertex> order(rest_n);
    for (std::size_t i = 0; i < rest_n; ++i) order[i] = vx(i + 1);
    shuffle(std::span<Vertex>(order), rng);

    std::vector<VertexPair> edges;
    for (std::size_t i = 1; i < spec.n; ++i) edges.emplace_back(0, vx(i));
    bool ok = true;
    std::size_t offset = 0;
    for (std::size_t size : sizes) {
      Graph block = sample_gnp(size, spec.p, rng);
      if (!is_connected(block)) {
        ok = false;
        break;
      }
      for (const Edge& e : block.edges()) edges.emplace_back(order[offset + e.u], order[offset + e.v]);
      offset += size;
    }
    if (!ok) continue;
    return {Graph::from_edges(spec.n, edges), attempt};
  }
  throw Error(ErrorCode::GenerationFailed, "no one-cut-vertex sample in " + std::to_string(spec.max_tries) + " tries");
}

std::vector<Graph> all_labeled_trees(std::size_t n) {
  require(n >= 2, "trees need n >= 2");
  std::vector<Graph> out;
  if (n == 2) {
    out.push_back(Graph::from_edges(2, {{0, 1}}));
    return out;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    // Prüfer decode.
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : seq) ++degree[x];
    std::vector<VertexPair> edges;
    for (std::size_t x : seq) {
      for (std::size_t leaf = 0; leaf < n; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(vx(leaf), vx(x));
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    std::vector<Vertex> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(vx(v));
    }
    edges.emplace_back(last[0], last[1]);
    out.push_back(Graph::from_edges(n, edges));

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

}  // namespace rainbow::gen

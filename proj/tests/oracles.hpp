#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/random.hpp"

namespace oracle {

using rainbow::Edge;
using rainbow::Graph;
using rainbow::Vertex;
using rainbow::VertexPair;

inline Graph without_edge(const Graph& g, std::size_t skip) {
  std::vector<VertexPair> edges;
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (e != skip) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  return Graph::from_edges(g.order(), edges);
}

inline std::size_t component_count(const Graph& g, int removed = -1) {
  std::vector<int> seen(g.order(), 0);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s] || static_cast<int>(s) == removed) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && static_cast<int>(w) != removed) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline std::vector<rainbow::EdgeId> bridges(const Graph& g) {
  std::vector<rainbow::EdgeId> out;
  const std::size_t base = component_count(g);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (component_count(without_edge(g, e)) > base) out.push_back(static_cast<rainbow::EdgeId>(e));
  }
  return out;
}

inline std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    // Removing v drops one vertex; isolated v removes a whole component.
    std::size_t base = component_count(g) - (g.degree(v) == 0 ? 1 : 0);
    if (component_count(g, static_cast<int>(v)) > base) out.push_back(v);
  }
  return out;
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> distances(const Graph& g) {
  const std::size_t n = g.order(), inf = rainbow::kUnreachable;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

namespace detail {
inline bool dfs(const Graph& g, const rainbow::EdgeColoring& col, Vertex v, Vertex target, std::vector<char>& on_path,
                std::set<rainbow::Color>& used) {
  if (v == target) return true;
  auto nbrs = g.neighbors(v);
  auto inc = g.incident_edges(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    Vertex w = nbrs[i];
    rainbow::Color c = col.color_of(inc[i]);
    if (on_path[w] || used.count(c)) continue;
    on_path[w] = 1;
    used.insert(c);
    if (dfs(g, col, w, target, on_path, used)) return true;
    used.erase(c);
    on_path[w] = 0;
  }
  return false;
}
}  // namespace detail

// Enumerates simple paths from u until one is rainbow and ends at w.
inline bool rainbow_pair(const Graph& g, const rainbow::EdgeColoring& col, Vertex u, Vertex w) {
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  std::set<rainbow::Color> used;
  return detail::dfs(g, col, u, w, on_path, used);
}

inline bool rainbow_connected(const Graph& g, const rainbow::EdgeColoring& col) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w)
      if (!rainbow_pair(g, col, u, w)) return false;
  return true;
}

// Minimum colors by trying every coloring with c = 1, 2, ... colors.
inline std::size_t rc(const Graph& g) {
  const std::size_t m = g.size();
  for (std::size_t c = 1; c <= m; ++c) {
    std::vector<rainbow::Color> colors(m, 1);
    while (true) {
      rainbow::EdgeColoring col(g, colors, c);
      if (rainbow_connected(g, col)) return c;
      std::size_t i = 0;
      while (i < m && colors[i] == c) colors[i++] = 1;
      if (i == m) break;
      ++colors[i];
    }
  }
  return m;
}

inline Graph gnp(std::size_t n, double p, rainbow::SplitMix64& rng) {
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph connected_gnp(std::size_t n, double p, rainbow::SplitMix64& rng) {
  while (true) {
    Graph g = gnp(n, p, rng);
    if (component_count(g) == 1) return g;
  }
}

inline rainbow::EdgeColoring random_coloring(const Graph& g, std::size_t k, rainbow::SplitMix64& rng) {
  std::vector<rainbow::Color> colors(g.size());
  for (auto& c : colors) c = static_cast<rainbow::Color>(1 + rng.below(k));
  return rainbow::EdgeColoring(g, colors, k);
}

}  // namespace oracle

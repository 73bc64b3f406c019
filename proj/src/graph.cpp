#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ColoringMismatch: return "ColoringMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::OutOfScopeGraph: return "OutOfScopeGraph";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

Graph Graph::from_edges(std::size_t n, std::span<const VertexPair> edge_list) {
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
    }
    if (a == b) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(n, {});
  g.incident_.assign(n, {});
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    g.adjacency_[ed.u].push_back(ed.v);
    g.incident_[ed.u].push_back(e);
    g.adjacency_[ed.v].push_back(ed.u);
    g.incident_[ed.v].push_back(e);
  }
  // Edges are sorted by (u, v), so adjacency of u gains its larger neighbors
  // in order but smaller neighbors arrive interleaved; sort both lists jointly.
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    auto& inc = g.incident_[v];
    std::vector<std::size_t> order(adj.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return adj[i] < adj[j]; });
    std::vector<Vertex> a2(adj.size());
    std::vector<EdgeId> i2(adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      a2[i] = adj[order[i]];
      i2[i] = inc[order[i]];
    }
    adj = std::move(a2);
    inc = std::move(i2);
  }
  return g;
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return std::nullopt;
  const auto& adj = adjacency_[a];
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_[a][static_cast<std::size_t>(it - adj.begin())];
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::optional<Vertex>> index(order());
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<VertexPair> sub;
  for (const Edge& e : edges_) {
    if (index[e.u] && index[e.v]) sub.emplace_back(*index[e.u], *index[e.v]);
  }
  return from_edges(keep.size(), sub);
}

Graph build_graph(std::size_t n, std::span<const VertexPair> edge_list) { return Graph::from_edges(n, edge_list); }

BfsLayers bfs_layers(const Graph& g, Vertex source) {
  if (source >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "bfs source " + std::to_string(source));
  BfsLayers out;
  out.center = source;
  out.dist.assign(g.order(), kUnreachable);
  out.dist[source] = 0;
  out.layers.push_back({source});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex u : out.layers.back()) {
      for (Vertex w : g.neighbors(u)) {
        if (out.dist[w] == kUnreachable) {
          out.dist[w] = out.layers.size();
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    BfsLayers layers = bfs_layers(g, v);
    std::size_t reached = 0;
    for (const auto& layer : layers.layers) reached += layer.size();
    if (reached != g.order()) return std::nullopt;
    best = std::max(best, layers.eccentricity());
  }
  return best;
}

std::optional<std::size_t> radius(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  std::size_t best = kUnreachable;
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, bfs_layers(g, v).eccentricity());
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::size_t reached = 0;
  for (const auto& layer : bfs_layers(g, 0).layers) reached += layer.size();
  return reached == g.order();
}

namespace {

std::vector<std::vector<Vertex>> components_skipping(const Graph& g, std::optional<Vertex> removed) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  if (removed) seen[*removed] = true;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Iterative lowlink DFS shared by bridges() and cut_vertices().
struct LowLink {
  std::vector<EdgeId> bridge_edges;
  std::vector<Vertex> articulation;
};

LowLink low_link(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = kUnreachable;
  std::vector<std::size_t> disc(n, kNone), low(n, 0);
  std::vector<bool> is_cut(n, false);
  LowLink out;

  struct Frame {
    Vertex v;
    std::optional<EdgeId> via;
    std::size_t next = 0;
    std::size_t children = 0;
  };
  std::size_t time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    std::vector<Frame> stack;
    stack.push_back({root, std::nullopt});
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      auto inc = g.incident_edges(f.v);
      if (f.next < nbrs.size()) {
        std::size_t i = f.next++;
        Vertex w = nbrs[i];
        if (f.via && inc[i] == *f.via) continue;
        if (disc[w] == kNone) {
          disc[w] = low[w] = time++;
          ++f.children;
          stack.push_back({w, inc[i]});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.v] = true;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] > disc[parent.v]) out.bridge_edges.push_back(*done.via);
      if (stack.size() >= 2 && low[done.v] >= disc[parent.v]) is_cut[parent.v] = true;
    }
  }
  std::sort(out.bridge_edges.begin(), out.bridge_edges.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.articulation.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) { return components_skipping(g, std::nullopt); }

std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex removed) {
  return components_skipping(g, removed);
}

std::vector<EdgeId> bridges(const Graph& g) { return low_link(g).bridge_edges; }

std::vector<Vertex> cut_vertices(const Graph& g) { return low_link(g).articulation; }

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

ForestBipartition spanning_forest_bipartition(const Graph& g, std::span<const Vertex> subset,
                                              bool require_no_isolated,
                                              std::optional<std::uint64_t> shuffle_seed, bool root_on_right) {
  std::vector<bool> member(g.order(), false);
  for (Vertex v : subset) {
    if (v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "subset vertex " + std::to_string(v));
    member[v] = true;
  }
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (member[v]) roots.push_back(v);
  }
  if (require_no_isolated) {
    for (Vertex v : roots) {
      bool has = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return member[w]; });
      if (!has) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " isolated in induced subgraph");
    }
  }

  std::optional<SplitMix64> rng;
  if (shuffle_seed) {
    rng.emplace(*shuffle_seed);
    shuffle(std::span<Vertex>(roots), *rng);
  }

  ForestBipartition out;
  out.side_of.assign(g.order(), std::nullopt);
  const Side root_side = root_on_right ? Side::Right : Side::Left;
  for (Vertex root : roots) {
    if (out.side_of[root]) continue;
    out.side_of[root] = root_side;
    // Stack of (vertex, neighbor order, cursor).
    struct Frame {
      Vertex v;
      std::vector<Vertex> order;
      std::size_t next = 0;
    };
    auto make_frame = [&](Vertex v) {
      Frame f{v, {}, 0};
      for (Vertex w : g.neighbors(v)) {
        if (member[w]) f.order.push_back(w);
      }
      if (rng) shuffle(std::span<Vertex>(f.order), *rng);
      return f;
    };
    std::vector<Frame> stack;
    stack.push_back(make_frame(root));
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.order.size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = f.order[f.next++];
      if (out.side_of[w]) continue;
      out.side_of[w] = *out.side_of[f.v] == Side::Left ? Side::Right : Side::Left;
      out.forest_edges.push_back(Edge{std::min(f.v, w), std::max(f.v, w)});
      stack.push_back(make_frame(w));
    }
  }
  std::sort(out.forest_edges.begin(), out.forest_edges.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!out.side_of[v]) continue;
    (*out.side_of[v] == Side::Left ? out.left : out.right).push_back(v);
  }
  return out;
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() == 0 || g.size() == n * (n - 1) / 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  auto common = [&](Vertex a, Vertex b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t count = 0;
    auto i = na.begin();
    auto j = nb.begin();
    while (i != na.end() && j != nb.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  };
  std::optional<std::size_t> lambda, mu;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      std::size_t c = common(a, b);
      auto& slot = g.adjacent(a, b) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
}

}  // namespace rainbow

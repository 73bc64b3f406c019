#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically and numbered in that order; the
/// edge id is the index into edges(). Neighbor lists are sorted and carry the
/// id of the connecting edge alongside each neighbor. Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Collapses duplicate and reversed pairs. Throws InvalidEdge on a
  /// self-loop and IndexOutOfRange when an endpoint is >= n.
  static Graph from_edges(std::size_t n, std::span<const VertexPair> edge_list);
  static Graph from_edges(std::size_t n, std::initializer_list<VertexPair> edge_list) {
    return from_edges(n, std::span<const VertexPair>(edge_list.begin(), edge_list.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

  /// Subgraph induced by `keep` (sorted, unique); vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
};

Graph build_graph(std::size_t n, std::span<const VertexPair> edge_list);

struct BfsLayers {
  Vertex center = 0;
  std::vector<std::size_t> dist;  // kUnreachable for vertices outside the component
  std::vector<std::vector<Vertex>> layers;

  std::size_t eccentricity() const { return layers.empty() ? 0 : layers.size() - 1; }
};

BfsLayers bfs_layers(const Graph& g, Vertex source);

/// Nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);
std::optional<std::size_t> radius(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Components of g - removed, in the original vertex labels.
std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex removed);

/// Bridges as edge ids in ascending order.
std::vector<EdgeId> bridges(const Graph& g);

/// Articulation vertices in ascending order.
std::vector<Vertex> cut_vertices(const Graph& g);

bool is_two_connected(const Graph& g);

enum class Side : std::uint8_t { Left, Right };

struct ForestBipartition {
  std::vector<Edge> forest_edges;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  // Indexed by vertex of the host graph; nullopt for vertices outside the subset.
  std::vector<std::optional<Side>> side_of;
};

/// Spanning forest of the subgraph induced by `subset` with the 2-colouring
/// it defines. Roots are the lowest vertex of each induced component and the
/// DFS follows ascending neighbor order. Passing `shuffle_seed` permutes both
/// root and neighbor order deterministically, which yields a different
/// forest of the same induced subgraph.
ForestBipartition spanning_forest_bipartition(const Graph& g, std::span<const Vertex> subset,
                                              bool require_no_isolated,
                                              std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                                              bool root_on_right = false);

struct SrgParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Nullopt when g is empty, complete, or not strongly regular.
std::optional<SrgParameters> srg_parameters(const Graph& g);

}  // namespace rainbow

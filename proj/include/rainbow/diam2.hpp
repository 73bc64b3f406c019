#pragma once

// Constructive rainbow colorings for graphs of diameter at most 2.
//
// A connected graph of diameter <= 2 falls in exactly one structural case:
//   * complete-like (diameter <= 1): one color suffices;
//   * it has k >= 1 bridges: then a single cut vertex is adjacent to all
//     other vertices and k + 2 colors suffice;
//   * bridgeless with one cut vertex (again universal): 3 colors;
//   * 2-connected: 5 colors, built from a BFS partition around a center.
//
// Every coloring returned here has been re-verified by the independent
// checker in verify.hpp before it leaves the module.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

struct NotDiameterAtMost2 {};
struct CompleteLike {};
struct BridgedCutVertex {
  Vertex cut_vertex = 0;
  std::size_t bridge_count = 0;
  std::size_t component_count = 0;
  std::vector<std::vector<Vertex>> trivial_components;
  std::vector<std::vector<Vertex>> nontrivial_components;
};
struct BridgelessCutVertex {
  Vertex cut_vertex = 0;
  std::vector<std::vector<Vertex>> components;
};
struct TwoConnected {};

using Diam2Classification =
    std::variant<NotDiameterAtMost2, CompleteLike, BridgedCutVertex, BridgelessCutVertex, TwoConnected>;

std::string tag_name(const Diam2Classification& cls);

Diam2Classification classify(const Graph& g);

/// Role of a vertex relative to a chosen center v in a 2-connected graph.
/// The first BFS layer splits into Left/Right (conventionally X/Y). The second
/// layer splits into Linked vertices (those with a neighbor in the second
/// layer; B), which a forest bipartition divides into LinkedLeft/LinkedRight
/// (B1/B2), and the rest: Straddling (neighbors on both sides; A) and
/// LeftOnly/RightOnly (D1/D2).
enum class Region : std::uint8_t { Center, Left, Right, LinkedLeft, LinkedRight, Straddling, LeftOnly, RightOnly };

std::string_view region_name(Region r);

/// Auxiliary graph on the first layer, used when no second-layer vertices are
/// adjacent. Vertex i of `graph` is first_layer[i] of the host graph.
struct AuxiliaryGraph {
  Graph graph;
  std::vector<Vertex> first_layer;
};

struct NeighborhoodPartition {
  Vertex center = 0;
  std::vector<Vertex> left, right;                 // first layer
  std::vector<Vertex> linked, linked_left, linked_right;
  std::vector<Vertex> straddling, left_only, right_only;
  std::optional<AuxiliaryGraph> auxiliary;
  std::map<Vertex, EdgeId> pinned_edge;  // LeftOnly vertex -> its edge that takes color 5
  std::vector<Region> region_of;
  bool swapped = false;  // labels were exchanged to empty RightOnly
};

/// Construction knobs explored by the repair loop.
struct PartitionOptions {
  // Ties in the first-layer split go Right instead of Left.
  bool flipped = false;
  // Permutes the spanning forest (of the linked set or the auxiliary graph).
  std::optional<std::uint64_t> forest_seed;
};

/// Partition around `center` when some second-layer vertices are adjacent.
/// Throws WrongCase if g is not 2-connected with diameter <= 2 or the linked
/// set is empty; StructureViolation if an invariant the construction relies
/// on fails.
NeighborhoodPartition partition_case_B_nonempty(const Graph& g, Vertex center, const PartitionOptions& options = {});

/// Partition around `center` when no two second-layer vertices are adjacent;
/// the first layer is split by a spanning tree of the auxiliary graph.
NeighborhoodPartition partition_case_B_empty(const Graph& g, Vertex center, const PartitionOptions& options = {});

/// First-layer vertices joined when adjacent or when they share a neighbor in
/// the second layer. Throws StructureViolation if the result is disconnected.
AuxiliaryGraph build_auxiliary_H(const Graph& g, Vertex center);

/// Edge colors 1..5 from a partition. The class table depends on whether the
/// linked set is empty.
EdgeColoring color_from_partition(const Graph& g, const NeighborhoodPartition& part);

struct Provenance {
  std::string construction;
  std::optional<Vertex> center;
  bool flipped = false;
  bool swapped = false;
  std::optional<std::uint64_t> forest_seed;
  std::size_t repair_attempts = 0;
  bool exact_fallback = false;
  std::vector<std::string> attempts;  // one line per construction that failed verification
};

struct ColoringOutcome {
  EdgeColoring coloring;
  std::size_t colors_used = 0;
  std::size_t guarantee = 0;
  Provenance provenance;
  RainbowCertificate certificate;
};

/// Raised when no verified coloring within budget was found. Carries the
/// offending graph and the failing pair of the last attempt.
class ConstructionFailure : public Error {
 public:
  ConstructionFailure(Graph g, VertexPair pair, const std::string& what)
      : Error(ErrorCode::ConstructionFailure, what), graph_(std::move(g)), pair_(pair) {}
  const Graph& graph() const { return graph_; }
  VertexPair failing_pair() const { return pair_; }

 private:
  Graph graph_;
  VertexPair pair_;
};

struct ColorOptions {
  std::optional<Vertex> center;
  bool try_all_centers = false;
  bool witnesses = false;
  bool repair = true;
  // Colorings searched by the last-resort exact search.
  std::uint64_t exact_fallback_budget = 2'000'000;
};

ColoringOutcome color_bridged(const Graph& g, const BridgedCutVertex& cls, const ColorOptions& options = {});
ColoringOutcome color_cutvertex_bridgeless(const Graph& g, const BridgelessCutVertex& cls,
                                           const ColorOptions& options = {});
ColoringOutcome color_two_connected(const Graph& g, const ColorOptions& options = {});

/// Dispatches on classify(). Throws OutOfScopeGraph for disconnected graphs
/// or diameter > 2.
ColoringOutcome color_diam2(const Graph& g, const ColorOptions& options = {});

}  // namespace rainbow

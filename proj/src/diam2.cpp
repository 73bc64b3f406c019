#include "rainbow/diam2.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

#include "rainbow/exact.hpp"
#include "rainbow/random.hpp"

namespace rainbow {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string pair_str(VertexPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

void require_two_connected_diam2(const Graph& g) {
  if (!is_two_connected(g)) throw Error(ErrorCode::WrongCase, "graph is not 2-connected");
  auto d = diameter(g);
  if (!d || *d > 2) throw Error(ErrorCode::WrongCase, "graph diameter exceeds 2");
}

bool has_neighbor_in(const Graph& g, Vertex u, const std::vector<bool>& set) {
  for (Vertex w : g.neighbors(u)) {
    if (set[w]) return true;
  }
  return false;
}

std::vector<bool> membership(std::size_t n, const std::vector<Vertex>& members) {
  std::vector<bool> out(n, false);
  for (Vertex v : members) out[v] = true;
  return out;
}

// Splits the second layer minus the linked set by adjacency to the final
// Left/Right sides, normalises so RightOnly is empty, and pins one edge per
// LeftOnly vertex.
void finish_partition(const Graph& g, const std::vector<Vertex>& second_layer, NeighborhoodPartition& part) {
  const std::size_t n = g.order();
  auto in_left = membership(n, part.left);
  auto in_right = membership(n, part.right);
  auto in_linked = membership(n, part.linked);
  for (Vertex u : second_layer) {
    if (in_linked[u]) continue;
    bool l = has_neighbor_in(g, u, in_left);
    bool r = has_neighbor_in(g, u, in_right);
    if (l && r) {
      part.straddling.push_back(u);
      part.region_of[u] = Region::Straddling;
    } else if (l) {
      part.left_only.push_back(u);
      part.region_of[u] = Region::LeftOnly;
    } else if (r) {
      part.right_only.push_back(u);
      part.region_of[u] = Region::RightOnly;
    } else {
      throw Error(ErrorCode::StructureViolation, "second-layer vertex " + std::to_string(u) + " has no first-layer neighbor");
    }
  }

  // No edge may leave the unlinked part of the second layer except towards
  // the first layer.
  for (const Edge& e : g.edges()) {
    auto unlinked = [&](Vertex x) {
      Region r = part.region_of[x];
      return r == Region::Straddling || r == Region::LeftOnly || r == Region::RightOnly;
    };
    auto second = [&](Vertex x) { return unlinked(x) || in_linked[x]; };
    if ((unlinked(e.u) && second(e.v)) || (unlinked(e.v) && second(e.u))) {
      throw Error(ErrorCode::StructureViolation, "edge " + pair_str({e.u, e.v}) + " joins an unlinked second-layer vertex");
    }
  }

  if (!part.left_only.empty() && !part.right_only.empty()) {
    throw Error(ErrorCode::StructureViolation, "both one-sided second-layer classes are nonempty");
  }
  if (part.left_only.empty() && !part.right_only.empty()) {
    std::swap(part.left, part.right);
    std::swap(part.linked_left, part.linked_right);
    std::swap(part.left_only, part.right_only);
    for (Region& r : part.region_of) {
      switch (r) {
        case Region::Left: r = Region::Right; break;
        case Region::Right: r = Region::Left; break;
        case Region::LinkedLeft: r = Region::LinkedRight; break;
        case Region::LinkedRight: r = Region::LinkedLeft; break;
        case Region::LeftOnly: r = Region::RightOnly; break;
        case Region::RightOnly: r = Region::LeftOnly; break;
        default: break;
      }
    }
    part.swapped = true;
  }

  for (Vertex u : part.left_only) {
    std::optional<EdgeId> first;
    std::size_t into_left = 0;
    auto nbrs = g.neighbors(u);
    auto inc = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (part.region_of[nbrs[i]] != Region::Left) continue;
      ++into_left;
      if (!first) first = inc[i];
    }
    if (!first || into_left < 2) {
      throw Error(ErrorCode::StructureViolation, "one-sided vertex " + std::to_string(u) + " has fewer than two edges into its side");
    }
    part.pinned_edge[u] = *first;
  }
}

std::vector<Vertex> second_layer_of(const BfsLayers& layers) {
  return layers.layers.size() > 2 ? layers.layers[2] : std::vector<Vertex>{};
}

std::vector<Vertex> linked_set(const Graph& g, const std::vector<Vertex>& second_layer) {
  auto in_second = membership(g.order(), second_layer);
  std::vector<Vertex> out;
  for (Vertex u : second_layer) {
    if (has_neighbor_in(g, u, in_second)) out.push_back(u);
  }
  return out;
}

struct Attempt {
  std::optional<EdgeColoring> coloring;
  NeighborhoodPartition partition;
  std::size_t verifications = 0;
  VertexPair failing{0, 0};
};

NeighborhoodPartition partition_for(const Graph& g, Vertex center, const PartitionOptions& opts) {
  BfsLayers layers = bfs_layers(g, center);
  if (linked_set(g, second_layer_of(layers)).empty()) return partition_case_B_empty(g, center, opts);
  return partition_case_B_nonempty(g, center, opts);
}

// Builds the partition and coloring for one configuration. On a verification
// failure, re-pins LeftOnly edges greedily while the failing-pair count drops.
Attempt try_configuration(const Graph& g, Vertex center, const PartitionOptions& opts, bool repin) {
  Attempt out;
  out.partition = partition_for(g, center, opts);
  EdgeColoring col = color_from_partition(g, out.partition);
  ++out.verifications;
  std::size_t failing = count_failing_pairs(g, col, 5);
  if (failing == 0) {
    out.coloring = std::move(col);
    return out;
  }
  if (repin && !out.partition.left_only.empty()) {
    bool improved = true;
    while (improved && failing > 0) {
      improved = false;
      for (Vertex u : out.partition.left_only) {
        auto nbrs = g.neighbors(u);
        auto inc = g.incident_edges(u);
        for (std::size_t i = 0; i < nbrs.size() && failing > 0; ++i) {
          if (out.partition.region_of[nbrs[i]] != Region::Left) continue;
          EdgeId current = out.partition.pinned_edge[u];
          if (inc[i] == current) continue;
          out.partition.pinned_edge[u] = inc[i];
          EdgeColoring trial = color_from_partition(g, out.partition);
          ++out.verifications;
          std::size_t f = count_failing_pairs(g, trial, 5);
          if (f < failing) {
            failing = f;
            col = std::move(trial);
            improved = true;
          } else {
            out.partition.pinned_edge[u] = current;
          }
        }
      }
    }
    if (failing == 0) {
      out.coloring = std::move(col);
      return out;
    }
  }
  auto cert = verify_rainbow_connected(g, col, VerifyOptions{.cap_colors = 5});
  out.failing = cert.failing_pair.value_or(VertexPair{0, 0});
  return out;
}

ColoringOutcome finalize(const Graph& g, EdgeColoring coloring, std::size_t guarantee, Provenance provenance,
                         const ColorOptions& options) {
  ColoringOutcome out;
  out.certificate = verify_rainbow_connected(g, coloring, VerifyOptions{.cap_colors = 16, .witnesses = options.witnesses});
  if (!out.certificate.connected) {
    throw ConstructionFailure(g, *out.certificate.failing_pair,
                              provenance.construction + " coloring fails at pair " + pair_str(*out.certificate.failing_pair));
  }
  out.colors_used = coloring.colors_used();
  if (out.colors_used > guarantee) {
    throw Error(ErrorCode::StructureViolation, "coloring uses " + std::to_string(out.colors_used) +
                                                   " colors, above the guarantee " + std::to_string(guarantee));
  }
  out.coloring = std::move(coloring);
  out.guarantee = guarantee;
  out.provenance = std::move(provenance);
  return out;
}

std::string describe(Vertex center, const PartitionOptions& opts) {
  std::string s = "center=" + std::to_string(center) + (opts.flipped ? " flipped" : "");
  if (opts.forest_seed) s += " forest_seed=" + std::to_string(*opts.forest_seed);
  return s;
}

}  // namespace

std::string tag_name(const Diam2Classification& cls) {
  return std::visit(overloaded{
                        [](const NotDiameterAtMost2&) { return std::string("NotDiameterAtMost2"); },
                        [](const CompleteLike&) { return std::string("CompleteLike"); },
                        [](const BridgedCutVertex&) { return std::string("BridgedCutVertex"); },
                        [](const BridgelessCutVertex&) { return std::string("BridgelessCutVertex"); },
                        [](const TwoConnected&) { return std::string("TwoConnected"); },
                    },
                    cls);
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::Center: return "center";
    case Region::Left: return "left";
    case Region::Right: return "right";
    case Region::LinkedLeft: return "linked_left";
    case Region::LinkedRight: return "linked_right";
    case Region::Straddling: return "straddling";
    case Region::LeftOnly: return "left_only";
    case Region::RightOnly: return "right_only";
  }
  return "?";
}

Diam2Classification classify(const Graph& g) {
  if (g.order() <= 1) return CompleteLike{};
  auto d = diameter(g);
  if (!d || *d > 2) return NotDiameterAtMost2{};
  if (*d <= 1) return CompleteLike{};
  auto cuts = cut_vertices(g);
  if (cuts.empty()) return TwoConnected{};
  if (cuts.size() != 1) {
    throw Error(ErrorCode::StructureViolation, "diameter-2 graph with " + std::to_string(cuts.size()) + " cut vertices");
  }
  const Vertex v = cuts.front();
  if (g.degree(v) + 1 != g.order()) {
    throw Error(ErrorCode::StructureViolation, "cut vertex " + std::to_string(v) + " is not universal");
  }
  auto comps = components_without(g, v);
  auto br = bridges(g);
  if (br.empty()) return BridgelessCutVertex{v, std::move(comps)};

  BridgedCutVertex out;
  out.cut_vertex = v;
  out.bridge_count = br.size();
  out.component_count = comps.size();
  for (auto& c : comps) (c.size() == 1 ? out.trivial_components : out.nontrivial_components).push_back(std::move(c));
  if (out.trivial_components.size() != out.bridge_count) {
    throw Error(ErrorCode::StructureViolation, "bridges do not match pendant vertices at the cut vertex");
  }
  return out;
}

AuxiliaryGraph build_auxiliary_H(const Graph& g, Vertex center) {
  BfsLayers layers = bfs_layers(g, center);
  AuxiliaryGraph aux;
  aux.first_layer = layers.layers.size() > 1 ? layers.layers[1] : std::vector<Vertex>{};
  const auto& first = aux.first_layer;
  std::vector<std::optional<Vertex>> index(g.order());
  for (std::size_t i = 0; i < first.size(); ++i) index[first[i]] = static_cast<Vertex>(i);

  std::vector<VertexPair> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] && index[e.v]) edges.emplace_back(*index[e.u], *index[e.v]);
  }
  for (Vertex u : second_layer_of(layers)) {
    std::vector<Vertex> near;
    for (Vertex w : g.neighbors(u)) {
      if (index[w]) near.push_back(*index[w]);
    }
    for (std::size_t i = 0; i < near.size(); ++i) {
      for (std::size_t j = i + 1; j < near.size(); ++j) edges.emplace_back(near[i], near[j]);
    }
  }
  aux.graph = Graph::from_edges(first.size(), edges);
  if (!is_connected(aux.graph)) {
    throw Error(ErrorCode::StructureViolation, "auxiliary first-layer graph is disconnected for center " + std::to_string(center));
  }
  return aux;
}

NeighborhoodPartition partition_case_B_nonempty(const Graph& g, Vertex center, const PartitionOptions& options) {
  require_two_connected_diam2(g);
  if (center >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "center " + std::to_string(center));
  const std::size_t n = g.order();
  BfsLayers layers = bfs_layers(g, center);
  const std::vector<Vertex> first = layers.layers[1];
  const std::vector<Vertex> second = second_layer_of(layers);

  NeighborhoodPartition part;
  part.center = center;
  part.region_of.assign(n, Region::Center);
  part.linked = linked_set(g, second);
  if (part.linked.empty()) throw Error(ErrorCode::WrongCase, "no adjacent second-layer vertices");

  ForestBipartition forest = spanning_forest_bipartition(g, part.linked, true, options.forest_seed);
  part.linked_left = forest.left;
  part.linked_right = forest.right;
  for (Vertex u : part.linked_left) part.region_of[u] = Region::LinkedLeft;
  for (Vertex u : part.linked_right) part.region_of[u] = Region::LinkedRight;
  auto in_b1 = membership(n, part.linked_left);
  auto in_b2 = membership(n, part.linked_right);

  // Seed split: first-layer vertices adjacent to the linked set.
  std::vector<Vertex> leftover;
  for (Vertex u : first) {
    bool to_b1 = has_neighbor_in(g, u, in_b1);
    bool to_b2 = has_neighbor_in(g, u, in_b2);
    if (to_b1 && to_b2) {
      (options.flipped ? part.right : part.left).push_back(u);
    } else if (to_b1) {
      part.left.push_back(u);
    } else if (to_b2) {
      part.right.push_back(u);
    } else {
      leftover.push_back(u);
    }
  }
  // Every leftover vertex has a neighbor in the seed split; placing it on
  // the opposite side keeps it adjacent across. Only the seed sets are
  // consulted, so the order of leftovers does not matter.
  auto seed_left = membership(n, part.left);
  auto seed_right = membership(n, part.right);
  for (Vertex u : leftover) {
    bool l = has_neighbor_in(g, u, seed_left);
    bool r = has_neighbor_in(g, u, seed_right);
    if (!l && !r) {
      throw Error(ErrorCode::StructureViolation,
                  "first-layer vertex " + std::to_string(u) + " has no neighbor in the seed split");
    }
    bool go_left = options.flipped ? !l : r;
    (go_left ? part.left : part.right).push_back(u);
  }
  std::sort(part.left.begin(), part.left.end());
  std::sort(part.right.begin(), part.right.end());
  for (Vertex u : part.left) part.region_of[u] = Region::Left;
  for (Vertex u : part.right) part.region_of[u] = Region::Right;

  finish_partition(g, second, part);
  return part;
}

NeighborhoodPartition partition_case_B_empty(const Graph& g, Vertex center, const PartitionOptions& options) {
  require_two_connected_diam2(g);
  if (center >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "center " + std::to_string(center));
  const std::size_t n = g.order();
  BfsLayers layers = bfs_layers(g, center);
  const std::vector<Vertex> second = second_layer_of(layers);
  if (!linked_set(g, second).empty()) throw Error(ErrorCode::WrongCase, "second layer has adjacent vertices");

  NeighborhoodPartition part;
  part.center = center;
  part.region_of.assign(n, Region::Center);
  part.auxiliary = build_auxiliary_H(g, center);
  const auto& aux = *part.auxiliary;
  std::vector<Vertex> all(aux.graph.order());
  for (Vertex i = 0; i < all.size(); ++i) all[i] = i;
  ForestBipartition tree = spanning_forest_bipartition(aux.graph, all, false, options.forest_seed, options.flipped);
  for (Vertex i : tree.left) part.left.push_back(aux.first_layer[i]);
  for (Vertex i : tree.right) part.right.push_back(aux.first_layer[i]);
  std::sort(part.left.begin(), part.left.end());
  std::sort(part.right.begin(), part.right.end());
  for (Vertex u : part.left) part.region_of[u] = Region::Left;
  for (Vertex u : part.right) part.region_of[u] = Region::Right;

  finish_partition(g, second, part);
  return part;
}

EdgeColoring color_from_partition(const Graph& g, const NeighborhoodPartition& part) {
  const bool linked_case = !part.linked.empty();
  const Color residual = linked_case ? 5 : 4;
  std::vector<Color> colors(g.size(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    Region a = part.region_of[g.edge(e).u];
    Region b = part.region_of[g.edge(e).v];
    if (a > b) std::swap(a, b);
    auto is = [&](Region x, Region y) { return a == x && b == y; };
    Color c = residual;
    if (is(Region::Center, Region::Left)) {
      c = 1;
    } else if (is(Region::Center, Region::Right)) {
      c = 2;
    } else if (is(Region::Left, Region::Right) || is(Region::Right, Region::Straddling)) {
      c = 3;
    } else if (linked_case && is(Region::LinkedLeft, Region::LinkedRight)) {
      c = 3;
    } else if (is(Region::Left, Region::Straddling)) {
      c = 4;
    } else if (linked_case && is(Region::Left, Region::LinkedLeft)) {
      c = 4;
    } else if (linked_case && is(Region::Right, Region::LinkedRight)) {
      c = 5;
    } else if (is(Region::Left, Region::LeftOnly)) {
      Vertex u = part.region_of[g.edge(e).u] == Region::LeftOnly ? g.edge(e).u : g.edge(e).v;
      c = part.pinned_edge.at(u) == e ? 5 : 4;
    }
    colors[e] = c;
  }
  return EdgeColoring(g, std::move(colors), 5);
}

ColoringOutcome color_bridged(const Graph& g, const BridgedCutVertex& cls, const ColorOptions& options) {
  auto actual = classify(g);
  const auto* mine = std::get_if<BridgedCutVertex>(&actual);
  if (!mine || mine->cut_vertex != cls.cut_vertex || mine->bridge_count != cls.bridge_count) {
    throw Error(ErrorCode::WrongCase, "graph is " + tag_name(actual) + ", not the given bridged case");
  }
  const std::size_t k = mine->bridge_count;
  const Vertex v = mine->cut_vertex;
  std::vector<Color> colors(g.size(), 0);
  Color next = 1;
  for (EdgeId e : bridges(g)) colors[e] = next++;

  Provenance prov;
  prov.center = v;
  if (mine->nontrivial_components.empty()) {
    prov.construction = "bridged/all-pendant";
    return finalize(g, EdgeColoring(g, std::move(colors)), k + 2, std::move(prov), options);
  }
  std::vector<Vertex> covered;
  for (const auto& c : mine->nontrivial_components) covered.insert(covered.end(), c.begin(), c.end());
  std::sort(covered.begin(), covered.end());
  ForestBipartition forest = spanning_forest_bipartition(g, covered, true);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (colors[e] != 0) continue;
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) {
      Vertex other = ed.u == v ? ed.v : ed.u;
      colors[e] = *forest.side_of[other] == Side::Left ? static_cast<Color>(k + 1) : static_cast<Color>(k + 2);
    } else {
      colors[e] = 1;
    }
  }
  prov.construction = "bridged/forest";
  return finalize(g, EdgeColoring(g, std::move(colors), k + 2), k + 2, std::move(prov), options);
}

ColoringOutcome color_cutvertex_bridgeless(const Graph& g, const BridgelessCutVertex& cls, const ColorOptions& options) {
  auto actual = classify(g);
  const auto* mine = std::get_if<BridgelessCutVertex>(&actual);
  if (!mine || mine->cut_vertex != cls.cut_vertex) {
    throw Error(ErrorCode::WrongCase, "graph is " + tag_name(actual) + ", not the given bridgeless cut-vertex case");
  }
  const Vertex v = mine->cut_vertex;
  std::vector<Vertex> covered;
  for (const auto& c : mine->components) covered.insert(covered.end(), c.begin(), c.end());
  std::sort(covered.begin(), covered.end());
  ForestBipartition forest = spanning_forest_bipartition(g, covered, true);
  std::vector<Color> colors(g.size(), 1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u != v && ed.v != v) continue;
    Vertex other = ed.u == v ? ed.v : ed.u;
    colors[e] = *forest.side_of[other] == Side::Left ? 2 : 3;
  }
  Provenance prov;
  prov.construction = "cut-vertex/forest";
  prov.center = v;
  return finalize(g, EdgeColoring(g, std::move(colors), 3), 3, std::move(prov), options);
}

ColoringOutcome color_two_connected(const Graph& g, const ColorOptions& options) {
  require_two_connected_diam2(g);
  const std::size_t n = g.order();
  const Vertex first_center = options.center.value_or(0);
  if (first_center >= n) throw Error(ErrorCode::IndexOutOfRange, "center " + std::to_string(first_center));

  Provenance prov;
  std::size_t verifications = 0;
  auto success = [&](Attempt& at, Vertex center, const PartitionOptions& opts) {
    prov.repair_attempts = verifications - 1;
    prov.construction = at.partition.linked.empty() ? "two-connected/auxiliary" : "two-connected/linked";
    prov.center = center;
    prov.flipped = opts.flipped;
    prov.swapped = at.partition.swapped;
    prov.forest_seed = opts.forest_seed;
    return finalize(g, std::move(*at.coloring), 5, prov, options);
  };
  VertexPair last_failing{0, 0};
  auto record_failure = [&](const Attempt& at, Vertex center, const PartitionOptions& opts) {
    prov.attempts.push_back(describe(center, opts) + " fails at " + pair_str(at.failing));
    last_failing = at.failing;
  };

  if (options.try_all_centers) {
    // Least center whose unrepaired construction verifies.
    std::vector<std::optional<Attempt>> results(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < count; ++c) {
      results[c] = try_configuration(g, static_cast<Vertex>(c), PartitionOptions{}, false);
    }
    for (Vertex c = 0; c < n; ++c) {
      // Centers are reported as if tried in order.
      verifications += results[c]->verifications;
      if (results[c]->coloring) {
        verifications = c + 1;
        return success(*results[c], c, PartitionOptions{});
      }
      record_failure(*results[c], c, PartitionOptions{});
    }
  }

  // Configurations in repair order: the requested center, its flipped
  // orientation, every other center both ways, then reseeded forests.
  std::vector<std::pair<Vertex, PartitionOptions>> plan;
  plan.push_back({first_center, PartitionOptions{}});
  if (options.repair) {
    plan.push_back({first_center, PartitionOptions{.flipped = true, .forest_seed = std::nullopt}});
    for (Vertex c = 0; c < n; ++c) {
      if (c == first_center) continue;
      plan.push_back({c, PartitionOptions{}});
      plan.push_back({c, PartitionOptions{.flipped = true, .forest_seed = std::nullopt}});
    }
    for (std::uint64_t i = 1; i <= 8; ++i) {
      plan.push_back({first_center, PartitionOptions{.forest_seed = SplitMix64::derive(0x5EED, i)}});
    }
  }

  for (const auto& [center, opts] : plan) {
    Attempt at = try_configuration(g, center, opts, options.repair);
    verifications += at.verifications;
    if (at.coloring) return success(at, center, opts);
    record_failure(at, center, opts);
  }

  if (options.repair) {
    ++verifications;
    if (auto found = search_coloring(g, 5, options.exact_fallback_budget)) {
      prov.repair_attempts = verifications - 1;
      prov.construction = "two-connected/exact-fallback";
      prov.center.reset();
      prov.exact_fallback = true;
      return finalize(g, std::move(*found), 5, prov, options);
    }
  }
  throw ConstructionFailure(g, last_failing,
                            "no verified 5-coloring after " + std::to_string(prov.attempts.size()) + " constructions");
}

ColoringOutcome color_diam2(const Graph& g, const ColorOptions& options) {
  Diam2Classification cls = classify(g);
  return std::visit(
      overloaded{
          [&](const NotDiameterAtMost2&) -> ColoringOutcome {
            throw Error(ErrorCode::OutOfScopeGraph, "graph is disconnected or has diameter above 2");
          },
          [&](const CompleteLike&) {
            Provenance prov;
            prov.construction = "complete-like/uniform";
            return finalize(g, EdgeColoring::uniform(g, 1), 1, std::move(prov), options);
          },
          [&](const BridgedCutVertex& c) { return color_bridged(g, c, options); },
          [&](const BridgelessCutVertex& c) { return color_cutvertex_bridgeless(g, c, options); },
          [&](const TwoConnected&) { return color_two_connected(g, options); },
      },
      cls);
}

}  // namespace rainbow

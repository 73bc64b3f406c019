#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using Path = std::vector<Vertex>;

struct VerifyOptions {
  std::size_t cap_colors = 16;
  bool witnesses = false;
  bool parallel = true;
};

/// Outcome of checking one coloring. When connected and witnesses were
/// requested, witness(u, w) holds a rainbow u-w path for every pair.
struct RainbowCertificate {
  bool connected = false;
  std::optional<VertexPair> failing_pair;  // lexicographically least, u < w
  std::size_t order = 0;
  std::vector<Path> witnesses;  // indexed by pair_index; empty in verdict-only mode

  bool has_witnesses() const { return !witnesses.empty() || order < 2; }
  const Path& witness(Vertex u, Vertex w) const;
  static std::size_t pair_index(std::size_t n, Vertex u, Vertex w);
};

/// Decides whether every pair of distinct vertices is joined by a path whose
/// edge colors are pairwise distinct.
///
/// When every edge has its own color this is plain connectivity and the
/// witnesses are BFS shortest paths. Otherwise the number of distinct colors
/// must not exceed options.cap_colors (CapExceeded) and the search runs over
/// (vertex, used-color-set) states; witnesses are shortest rainbow paths.
RainbowCertificate verify_rainbow_connected(const Graph& g, const EdgeColoring& coloring,
                                            const VerifyOptions& options = {});

/// Shortest rainbow path from u to w, if any.
std::optional<Path> rainbow_path(const Graph& g, const EdgeColoring& coloring, Vertex u, Vertex w,
                                 std::size_t cap_colors = 16);

/// Unordered pairs without a rainbow path. Used by the colorer's repair loop.
std::size_t count_failing_pairs(const Graph& g, const EdgeColoring& coloring, std::size_t cap_colors = 16);

/// Checks a witness independently: a simple u-w path in g with pairwise
/// distinct edge colors and at most color_count() edges.
bool is_rainbow_path(const Graph& g, const EdgeColoring& coloring, const Path& path, Vertex u, Vertex w);

/// Re-checks every witness of a Connected certificate.
bool certificate_valid(const Graph& g, const EdgeColoring& coloring, const RainbowCertificate& cert);

}  // namespace rainbow

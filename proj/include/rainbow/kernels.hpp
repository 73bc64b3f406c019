#pragma once

// Bitset kernels behind the rainbow verifier and the exact search.
//
// A coloring with k <= 16 distinct colors on n <= 64 vertices is encoded as
// one neighbor mask per (color, vertex). From a source s the kernel computes,
// for every color subset S, the vertex set reachable from s by a walk that uses
// each color of S exactly once. A target is rainbow-reachable iff it appears
// in some subset's reach set: any rainbow walk shortcuts to a rainbow path.
//
// Each entry point exists twice: a serial reference and an OpenMP version that
// distributes sources over threads. Tests hold the two equal.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::kernels {

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxColors = 16;

class ColorMasks {
 public:
  ColorMasks() = default;
  /// colors[e] in 0..k-1 (already compressed).
  ColorMasks(const Graph& g, std::span<const std::uint8_t> colors, std::size_t k);

  /// Reuses storage; `g` must be the graph passed at construction.
  void assign(const Graph& g, std::span<const std::uint8_t> colors, std::size_t k);

  std::size_t order() const noexcept { return n_; }
  std::size_t color_count() const noexcept { return k_; }
  std::uint64_t all_vertices() const noexcept { return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1); }
  std::uint64_t neighbors(std::size_t color, Vertex v) const { return masks_[color * n_ + v]; }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> masks_;
};

/// True when `g` and a k-color coloring fit the kernel limits.
bool fits(const Graph& g, std::size_t k);

/// Vertices reachable from `source` by a rainbow path (source included).
/// `scratch` is resized as needed and may be reused across calls.
std::uint64_t rainbow_reach(const ColorMasks& masks, Vertex source, std::vector<std::uint64_t>& scratch);

std::optional<VertexPair> least_failing_pair_serial(const ColorMasks& masks);
std::optional<VertexPair> least_failing_pair_parallel(const ColorMasks& masks);

/// Unordered pairs {u, w} with no rainbow path.
std::size_t failing_pair_count_serial(const ColorMasks& masks);
std::size_t failing_pair_count_parallel(const ColorMasks& masks);

/// Verdict-only check used in tight loops. Tries `hint` first and, on
/// failure, stores the failing source back into it.
bool rainbow_connected(const ColorMasks& masks, Vertex& hint, std::vector<std::uint64_t>& scratch);

}  // namespace rainbow::kernels

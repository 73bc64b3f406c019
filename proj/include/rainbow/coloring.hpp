#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = std::uint32_t;

/// Total map from edge id to a color in 1..color_count(). Adjacent edges may
/// share a color.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// colors[e] is the color of edge e of `g`. color_count defaults to the
  /// largest color present. Throws ColoringMismatch when the sizes disagree or
  /// a color is zero.
  EdgeColoring(const Graph& g, std::vector<Color> colors, std::size_t color_count = 0);

  /// Every edge gets `color`.
  static EdgeColoring uniform(const Graph& g, Color color = 1);

  /// Edge e gets color e + 1.
  static EdgeColoring all_distinct(const Graph& g);

  Color color_of(EdgeId e) const { return colors_[e]; }
  std::size_t edge_count() const noexcept { return colors_.size(); }
  std::size_t color_count() const noexcept { return color_count_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  /// Number of distinct colors actually present.
  std::size_t colors_used() const;
  bool all_colors_distinct() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  std::size_t color_count_ = 0;
};

}  // namespace rainbow

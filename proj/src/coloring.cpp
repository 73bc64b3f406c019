#include "rainbow/coloring.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

EdgeColoring::EdgeColoring(const Graph& g, std::vector<Color> colors, std::size_t color_count)
    : colors_(std::move(colors)) {
  if (colors_.size() != g.size()) {
    throw Error(ErrorCode::ColoringMismatch, "coloring has " + std::to_string(colors_.size()) +
                                                 " entries for " + std::to_string(g.size()) + " edges");
  }
  Color top = 0;
  for (Color c : colors_) {
    if (c == 0) throw Error(ErrorCode::ColoringMismatch, "colors must be positive");
    top = std::max(top, c);
  }
  if (color_count != 0 && color_count < top) {
    throw Error(ErrorCode::ColoringMismatch, "color " + std::to_string(top) + " exceeds declared count " +
                                                 std::to_string(color_count));
  }
  color_count_ = color_count != 0 ? color_count : top;
}

EdgeColoring EdgeColoring::uniform(const Graph& g, Color color) {
  return EdgeColoring(g, std::vector<Color>(g.size(), color));
}

EdgeColoring EdgeColoring::all_distinct(const Graph& g) {
  std::vector<Color> colors(g.size());
  for (std::size_t e = 0; e < colors.size(); ++e) colors[e] = static_cast<Color>(e + 1);
  return EdgeColoring(g, std::move(colors));
}

std::size_t EdgeColoring::colors_used() const {
  std::vector<Color> sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool EdgeColoring::all_colors_distinct() const { return colors_used() == colors_.size(); }

}  // namespace rainbow

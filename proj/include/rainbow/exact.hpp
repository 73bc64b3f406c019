#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct RcResult {
  enum class Kind { Exact, Bounds };

  Kind kind = Kind::Bounds;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t colorings_tested = 0;
  bool budget_exhausted = false;
  std::optional<EdgeColoring> witness;  // achieves `upper`

  bool exact() const { return kind == Kind::Exact; }
  std::size_t value() const { return upper; }
};

struct ExactOptions {
  std::uint64_t budget = 50'000'000;
  std::size_t max_colors = 16;
  std::size_t max_edges = 20;
  bool parallel = true;
  // Called roughly every 2^20 tested colorings with the running total.
  std::function<void(std::uint64_t)> progress;
};

/// max(diameter, bridges) when the graph has diameter <= 2 and a cut vertex
/// (all bridges then meet at that vertex and pairwise need distinct colors);
/// otherwise the diameter. Throws OutOfScopeGraph when disconnected.
std::size_t rc_lower_bound(const Graph& g);

/// Exact rainbow connection number by exhaustive search.
///
/// Levels c = lower bound, lower bound + 1, ... are searched in canonical
/// order: colorings are restricted-growth strings over the edge ids (edge 0
/// takes color 1; color j + 1 appears only after color j), so each coloring
/// is visited once up to renaming of colors. The constructive colorer (or m
/// distinct colors off diameter 2) supplies the upper bound and its witness,
/// so the last level never needs searching. Results do not depend on the
/// thread count: `colorings_tested` counts canonical positions.
RcResult exact_rc(const Graph& g, const ExactOptions& options = {});

/// First rainbow coloring with at most `colors` colors in canonical order,
/// testing at most `budget` colorings. Requires at most 64 vertices.
std::optional<EdgeColoring> search_coloring(const Graph& g, std::size_t colors, std::uint64_t budget,
                                            bool parallel = true);

/// Number of restricted-growth strings of `length` with at most `max_classes`
/// distinct values (saturates at UINT64_MAX).
std::uint64_t restricted_growth_count(std::size_t length, std::size_t max_classes);

/// Visits restricted-growth strings (values 0-based) in lexicographic order
/// until `visit` returns false.
void for_each_restricted_growth(std::size_t length, std::size_t max_classes,
                                const std::function<bool(std::span<const std::uint8_t>)>& visit);

}  // namespace rainbow

#include "rainbow/kernels.hpp"

#include <omp.h>

#include <bit>

namespace rainbow::kernels {

ColorMasks::ColorMasks(const Graph& g, std::span<const std::uint8_t> colors, std::size_t k) { assign(g, colors, k); }

void ColorMasks::assign(const Graph& g, std::span<const std::uint8_t> colors, std::size_t k) {
  n_ = g.order();
  k_ = k;
  masks_.assign(k * n_, 0);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::uint64_t* row = masks_.data() + colors[e] * n_;
    row[edges[e].u] |= 1ULL << edges[e].v;
    row[edges[e].v] |= 1ULL << edges[e].u;
  }
}

bool fits(const Graph& g, std::size_t k) { return g.order() <= kMaxVertices && k <= kMaxColors; }

namespace {

inline std::uint64_t expand(const ColorMasks& masks, std::size_t color, std::uint64_t from) {
  std::uint64_t out = 0;
  while (from) {
    auto v = static_cast<Vertex>(std::countr_zero(from));
    from &= from - 1;
    out |= masks.neighbors(color, v);
  }
  return out;
}

inline std::uint64_t above(Vertex s, std::size_t n) {
  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  return s + 1 >= 64 ? 0 : (all & ~((2ULL << s) - 1));
}

}  // namespace

std::uint64_t rainbow_reach(const ColorMasks& masks, Vertex source, std::vector<std::uint64_t>& scratch) {
  const std::size_t k = masks.color_count();
  const std::size_t subsets = std::size_t{1} << k;
  const std::uint64_t all = masks.all_vertices();
  scratch.assign(subsets, 0);
  scratch[0] = 1ULL << source;
  std::uint64_t reached = scratch[0];
  for (std::size_t set = 1; set < subsets && reached != all; ++set) {
    std::uint64_t acc = 0;
    for (std::size_t rest = set; rest; rest &= rest - 1) {
      std::size_t color = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint64_t prev = scratch[set ^ (std::size_t{1} << color)];
      if (prev) acc |= expand(masks, color, prev);
    }
    scratch[set] = acc;
    reached |= acc;
  }
  return reached;
}

std::optional<VertexPair> least_failing_pair_serial(const ColorMasks& masks) {
  std::vector<std::uint64_t> scratch;
  const std::size_t n = masks.order();
  for (Vertex s = 0; s + 1 < n; ++s) {
    std::uint64_t missing = above(s, n) & ~rainbow_reach(masks, s, scratch);
    if (missing) return VertexPair{s, static_cast<Vertex>(std::countr_zero(missing))};
  }
  return std::nullopt;
}

std::optional<VertexPair> least_failing_pair_parallel(const ColorMasks& masks) {
  const auto n = static_cast<std::int64_t>(masks.order());
  std::vector<std::uint64_t> missing(masks.order(), 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < n - 1; ++s) {
      auto src = static_cast<Vertex>(s);
      missing[s] = above(src, masks.order()) & ~rainbow_reach(masks, src, scratch);
    }
  }
  for (Vertex s = 0; s < masks.order(); ++s) {
    if (missing[s]) return VertexPair{s, static_cast<Vertex>(std::countr_zero(missing[s]))};
  }
  return std::nullopt;
}

std::size_t failing_pair_count_serial(const ColorMasks& masks) {
  std::vector<std::uint64_t> scratch;
  std::size_t total = 0;
  for (Vertex s = 0; s < masks.order(); ++s) {
    total += static_cast<std::size_t>(std::popcount(above(s, masks.order()) & ~rainbow_reach(masks, s, scratch)));
  }
  return total;
}

std::size_t failing_pair_count_parallel(const ColorMasks& masks) {
  const auto n = static_cast<std::int64_t>(masks.order());
  std::size_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < n; ++s) {
      auto src = static_cast<Vertex>(s);
      total += static_cast<std::size_t>(
          std::popcount(above(src, masks.order()) & ~rainbow_reach(masks, src, scratch)));
    }
  }
  return total;
}

bool rainbow_connected(const ColorMasks& masks, Vertex& hint, std::vector<std::uint64_t>& scratch) {
  const std::size_t n = masks.order();
  const std::uint64_t all = masks.all_vertices();
  if (hint < n && rainbow_reach(masks, hint, scratch) != all) return false;
  // Rainbow reachability is symmetric, so checking each source against the
  // vertices above it covers every pair; the hint is checked in full.
  for (Vertex s = 0; s + 1 < n; ++s) {
    if (s == hint) continue;
    std::uint64_t missing = above(s, n) & ~rainbow_reach(masks, s, scratch);
    if (missing) {
      hint = s;
      return false;
    }
  }
  return true;
}

}  // namespace rainbow::kernels

#include "rainbow/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

#include "rainbow/diam2.hpp"
#include "rainbow/error.hpp"
#include "rainbow/kernels.hpp"

namespace rainbow {
namespace {

constexpr std::uint64_t kNotFound = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kProgressEvery = std::uint64_t{1} << 20;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kNotFound - b ? kNotFound : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kNotFound / b ? kNotFound : a * b;
}

// tail[r][k]: completions of a restricted-growth prefix that already uses k
// classes, with r positions left and at most `cap` classes overall.
std::vector<std::vector<std::uint64_t>> completion_table(std::size_t length, std::size_t cap) {
  std::vector<std::vector<std::uint64_t>> tail(length + 1, std::vector<std::uint64_t>(cap + 2, 0));
  for (std::size_t k = 0; k <= cap; ++k) tail[0][k] = 1;
  for (std::size_t r = 1; r <= length; ++r) {
    for (std::size_t k = 0; k <= cap; ++k) {
      std::uint64_t v = sat_mul(k, tail[r - 1][k]);
      if (k < cap) v = sat_add(v, tail[r - 1][k + 1]);
      tail[r][k] = v;
    }
  }
  return tail;
}

struct LevelOutcome {
  std::optional<std::vector<std::uint8_t>> coloring;
  std::uint64_t tested = 0;
  bool exhausted = false;
};

struct Progress {
  const std::function<void(std::uint64_t)>* callback = nullptr;
  std::uint64_t base = 0;
  std::atomic<std::uint64_t> done{0};

  void add(std::uint64_t count) {
    if (!callback || !*callback) return;
    std::uint64_t before = done.fetch_add(count);
    if ((before + count) / kProgressEvery != before / kProgressEvery) {
#pragma omp critical(rainbow_progress)
      (*callback)(base + before + count);
    }
  }
};

// Reference enumeration: walk every restricted-growth string in order.
LevelOutcome search_level_serial(const Graph& g, std::size_t colors, std::uint64_t limit, Progress& progress) {
  LevelOutcome out;
  kernels::ColorMasks masks;
  std::vector<std::uint64_t> scratch;
  Vertex hint = 0;
  std::uint64_t position = 0;
  for_each_restricted_growth(g.size(), colors, [&](std::span<const std::uint8_t> rgs) {
    if (position >= limit) {
      out.exhausted = true;
      return false;
    }
    ++position;
    progress.add(1);
    masks.assign(g, rgs, colors);
    if (kernels::rainbow_connected(masks, hint, scratch)) {
      out.coloring.emplace(rgs.begin(), rgs.end());
      return false;
    }
    return true;
  });
  out.tested = position;
  return out;
}

// Splits the canonical order into prefix blocks of known size and scans the
// blocks in parallel. The winner is the least canonical position that
// verifies, so the outcome matches the serial scan exactly.
LevelOutcome search_level_parallel(const Graph& g, std::size_t colors, std::uint64_t limit, Progress& progress) {
  const std::size_t m = g.size();
  LevelOutcome out;
  auto tail = completion_table(m, colors);
  const std::uint64_t total = m == 0 ? 1 : tail[m - 1][1];

  std::size_t prefix_len = 1;
  while (prefix_len < m && restricted_growth_count(prefix_len, colors) < 1024) ++prefix_len;
  prefix_len = std::min(prefix_len, m);

  struct Block {
    std::vector<std::uint8_t> prefix;
    std::size_t classes = 0;
    std::uint64_t offset = 0;
  };
  std::vector<Block> blocks;
  std::uint64_t offset = 0;
  for_each_restricted_growth(prefix_len, colors, [&](std::span<const std::uint8_t> p) {
    std::size_t classes = p.empty() ? 0 : static_cast<std::size_t>(*std::max_element(p.begin(), p.end())) + 1;
    blocks.push_back({{p.begin(), p.end()}, classes, offset});
    offset = sat_add(offset, tail[m - prefix_len][classes]);
    return true;
  });

  std::atomic<std::uint64_t> best{kNotFound};
  std::vector<std::uint8_t> best_coloring;
  const auto block_count = static_cast<std::int64_t>(blocks.size());

#pragma omp parallel
  {
    kernels::ColorMasks masks;
    std::vector<std::uint64_t> scratch;
    std::vector<std::uint8_t> rgs(m);
    Vertex hint = 0;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < block_count; ++b) {
      const Block& block = blocks[b];
      if (block.offset >= limit || block.offset > best.load(std::memory_order_relaxed)) continue;
      std::copy(block.prefix.begin(), block.prefix.end(), rgs.begin());
      std::uint64_t position = block.offset;
      std::uint64_t pending = 0;
      // Depth-first over the remaining positions; returns true to stop.
      auto fill = [&](auto&& self, std::size_t pos, std::size_t classes) -> bool {
        if (pos == m) {
          if (position >= limit || position > best.load(std::memory_order_relaxed)) return true;
          ++pending;
          masks.assign(g, rgs, colors);
          if (kernels::rainbow_connected(masks, hint, scratch)) {
#pragma omp critical(rainbow_best)
            {
              if (position < best.load()) {
                best.store(position);
                best_coloring = rgs;
              }
            }
            return true;
          }
          ++position;
          if (pending >= 4096) {
            progress.add(pending);
            pending = 0;
          }
          return false;
        }
        std::size_t options = std::min(classes + 1, colors);
        for (std::size_t c = 0; c < options; ++c) {
          rgs[pos] = static_cast<std::uint8_t>(c);
          if (self(self, pos + 1, std::max(classes, c + 1))) return true;
        }
        return false;
      };
      fill(fill, prefix_len, block.classes);
      progress.add(pending);
    }
  }

  if (best.load() != kNotFound) {
    out.coloring = std::move(best_coloring);
    out.tested = best.load() + 1;
  } else {
    out.tested = std::min(total, limit);
    out.exhausted = total > limit;
  }
  return out;
}

EdgeColoring to_coloring(const Graph& g, std::span<const std::uint8_t> rgs) {
  std::vector<Color> colors(rgs.begin(), rgs.end());
  for (Color& c : colors) ++c;
  return EdgeColoring(g, std::move(colors));
}

// Renames colors to 1..k in order of first appearance along edge ids.
EdgeColoring normalize(const Graph& g, const EdgeColoring& col) {
  std::map<Color, Color> rename;
  std::vector<Color> out;
  out.reserve(col.edge_count());
  for (Color c : col.colors()) {
    auto [it, inserted] = rename.emplace(c, static_cast<Color>(rename.size() + 1));
    out.push_back(it->second);
  }
  return EdgeColoring(g, std::move(out));
}

LevelOutcome search_level(const Graph& g, std::size_t colors, std::uint64_t limit, bool parallel, Progress& progress) {
  if (!kernels::fits(g, colors)) {
    throw Error(ErrorCode::CapExceeded, "exact search supports at most " + std::to_string(kernels::kMaxVertices) +
                                            " vertices and " + std::to_string(kernels::kMaxColors) + " colors");
  }
  return parallel ? search_level_parallel(g, colors, limit, progress) : search_level_serial(g, colors, limit, progress);
}

}  // namespace

std::uint64_t restricted_growth_count(std::size_t length, std::size_t max_classes) {
  if (length == 0) return 1;
  if (max_classes == 0) return 0;
  return completion_table(length, max_classes)[length - 1][1];
}

void for_each_restricted_growth(std::size_t length, std::size_t max_classes,
                                const std::function<bool(std::span<const std::uint8_t>)>& visit) {
  if (length == 0) {
    visit({});
    return;
  }
  if (max_classes == 0) return;
  std::vector<std::uint8_t> rgs(length, 0);
  // prefix_max[i] = number of classes used by rgs[0..i].
  std::vector<std::size_t> prefix_max(length, 1);
  while (true) {
    if (!visit(rgs)) return;
    // Increment the rightmost position that can still grow.
    bool advanced = false;
    for (std::size_t i = length - 1; i >= 1 && !advanced; --i) {
      std::size_t allowed = std::min(prefix_max[i - 1] + 1, max_classes);
      if (static_cast<std::size_t>(rgs[i]) + 1 < allowed) {
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], static_cast<std::size_t>(rgs[i]) + 1);
        for (std::size_t j = i + 1; j < length; ++j) {
          rgs[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

std::size_t rc_lower_bound(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::OutOfScopeGraph, "graph is disconnected");
  if (g.order() <= 1) return 0;
  const std::size_t d = *diameter(g);
  if (d <= 2 && !cut_vertices(g).empty()) return std::max(d, bridges(g).size());
  return d;
}

std::optional<EdgeColoring> search_coloring(const Graph& g, std::size_t colors, std::uint64_t budget, bool parallel) {
  if (!kernels::fits(g, colors)) return std::nullopt;
  Progress progress;
  LevelOutcome level = search_level(g, colors, budget, parallel, progress);
  if (!level.coloring) return std::nullopt;
  return to_coloring(g, *level.coloring);
}

RcResult exact_rc(const Graph& g, const ExactOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::OutOfScopeGraph, "graph is disconnected");
  RcResult result;
  if (g.order() <= 1) {
    result.kind = RcResult::Kind::Exact;
    result.witness = EdgeColoring(g, {});
    return result;
  }

  const std::size_t lower = rc_lower_bound(g);
  // Upper bound from the constructive colorer where it applies, else one
  // color per edge.
  EdgeColoring upper_witness = EdgeColoring::all_distinct(g);
  if (!std::holds_alternative<NotDiameterAtMost2>(classify(g))) {
    try {
      ColoringOutcome outcome = color_diam2(g);
      if (outcome.colors_used < upper_witness.colors_used()) upper_witness = normalize(g, outcome.coloring);
    } catch (const Error&) {
      // Keep the trivial bound.
    }
  }
  const std::size_t upper = upper_witness.colors_used();
  result.lower = lower;
  result.upper = upper;
  result.witness = upper_witness;

  if (g.size() > options.max_edges) return result;

  Progress progress;
  progress.callback = &options.progress;
  std::uint64_t remaining = options.budget;
  for (std::size_t c = lower; c < upper; ++c) {
    result.lower = c;
    if (c > options.max_colors || !kernels::fits(g, c)) return result;
    progress.base = result.colorings_tested;
    LevelOutcome level = search_level(g, c, remaining, options.parallel, progress);
    result.colorings_tested += level.tested;
    remaining -= std::min(remaining, level.tested);
    if (level.coloring) {
      EdgeColoring found = normalize(g, to_coloring(g, *level.coloring));
      result.kind = RcResult::Kind::Exact;
      result.upper = found.colors_used();
      result.lower = result.upper;
      result.witness = std::move(found);
      return result;
    }
    if (level.exhausted) {
      result.budget_exhausted = true;
      return result;
    }
  }
  result.kind = RcResult::Kind::Exact;
  result.lower = upper;
  return result;
}

}  // namespace rainbow

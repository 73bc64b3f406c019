#include "rainbow/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/kernels.hpp"

namespace rainbow {
namespace {

struct Compressed {
  std::vector<std::uint8_t> colors;  // valid when k <= 255
  std::vector<std::uint32_t> wide;   // always valid
  std::size_t k = 0;
};

Compressed compress(const EdgeColoring& coloring) {
  std::vector<Color> palette = coloring.colors();
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  Compressed out;
  out.k = palette.size();
  out.wide.reserve(coloring.edge_count());
  for (Color c : coloring.colors()) {
    out.wide.push_back(static_cast<std::uint32_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
  }
  if (out.k <= 255) out.colors.assign(out.wide.begin(), out.wide.end());
  return out;
}

void check_cover(const Graph& g, const EdgeColoring& coloring) {
  if (coloring.edge_count() != g.size()) {
    throw Error(ErrorCode::ColoringMismatch, "coloring covers " + std::to_string(coloring.edge_count()) +
                                                 " edges, graph has " + std::to_string(g.size()));
  }
}

// Breadth-first search over (vertex, used colors) from one source. Reaching a
// vertex first in BFS order gives a shortest rainbow walk, which is a path.
class StateSearch {
 public:
  StateSearch(const Graph& g, const std::vector<std::uint32_t>& colors, std::size_t k)
      : g_(g), colors_(colors), k_(k), subsets_(std::size_t{1} << k) {}

  // Searches from `source` until every vertex in `targets` is hit or the
  // state space is exhausted. Returns hit state per vertex (or kNone).
  void run(Vertex source, const std::vector<bool>& targets, bool record_pred) {
    const std::size_t states = g_.order() * subsets_;
    visited_.assign(states, false);
    if (record_pred) pred_.assign(states, kNone);
    hit_.assign(g_.order(), kNone);
    std::size_t remaining = 0;
    for (Vertex v = 0; v < g_.order(); ++v) remaining += (targets[v] && v != source) ? 1 : 0;

    std::vector<std::size_t> queue;
    std::size_t start = index(source, 0);
    visited_[start] = true;
    hit_[source] = start;
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size() && remaining > 0; ++head) {
      std::size_t state = queue[head];
      Vertex v = static_cast<Vertex>(state / subsets_);
      std::size_t used = state % subsets_;
      auto nbrs = g_.neighbors(v);
      auto inc = g_.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        std::size_t bit = std::size_t{1} << colors_[inc[i]];
        if (used & bit) continue;
        std::size_t next = index(nbrs[i], used | bit);
        if (visited_[next]) continue;
        visited_[next] = true;
        if (record_pred) pred_[next] = state;
        queue.push_back(next);
        if (hit_[nbrs[i]] == kNone) {
          hit_[nbrs[i]] = next;
          if (targets[nbrs[i]]) --remaining;
        }
      }
    }
  }

  bool reached(Vertex v) const { return hit_[v] != kNone; }

  Path path_to(Vertex target) const {
    Path out;
    for (std::size_t s = hit_[target]; s != kNone; s = pred_[s]) out.push_back(static_cast<Vertex>(s / subsets_));
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t index(Vertex v, std::size_t used) const { return v * subsets_ + used; }

  const Graph& g_;
  const std::vector<std::uint32_t>& colors_;
  std::size_t k_;
  std::size_t subsets_;
  std::vector<bool> visited_;
  std::vector<std::size_t> pred_;
  std::vector<std::size_t> hit_;
};

RainbowCertificate fast_path(const Graph& g, bool witnesses) {
  RainbowCertificate cert;
  cert.order = g.order();
  const std::size_t n = g.order();
  auto comps = components(g);
  if (comps.size() > 1) {
    // Least u whose component misses some larger vertex, then the least such vertex.
    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (Vertex v : comps[c]) comp_of[v] = c;
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = u + 1; w < n; ++w) {
        if (comp_of[w] != comp_of[u]) {
          cert.failing_pair = VertexPair{u, w};
          return cert;
        }
      }
    }
  }
  cert.connected = true;
  if (witnesses && n >= 2) {
    cert.witnesses.resize(n * (n - 1) / 2);
    for (Vertex u = 0; u + 1 < n; ++u) {
      BfsLayers layers = bfs_layers(g, u);
      for (Vertex w = u + 1; w < n; ++w) {
        Path p{w};
        Vertex cur = w;
        while (cur != u) {
          for (Vertex x : g.neighbors(cur)) {
            if (layers.dist[x] + 1 == layers.dist[cur]) {
              cur = x;
              break;
            }
          }
          p.push_back(cur);
        }
        std::reverse(p.begin(), p.end());
        cert.witnesses[RainbowCertificate::pair_index(n, u, w)] = std::move(p);
      }
    }
  }
  return cert;
}

}  // namespace

std::size_t RainbowCertificate::pair_index(std::size_t n, Vertex u, Vertex w) {
  if (u > w) std::swap(u, w);
  // Row-major over u < w.
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (w - u - 1);
}

const Path& RainbowCertificate::witness(Vertex u, Vertex w) const { return witnesses.at(pair_index(order, u, w)); }

RainbowCertificate verify_rainbow_connected(const Graph& g, const EdgeColoring& coloring, const VerifyOptions& options) {
  check_cover(g, coloring);
  const std::size_t n = g.order();
  if (coloring.all_colors_distinct()) return fast_path(g, options.witnesses);

  Compressed cc = compress(coloring);
  if (cc.k > options.cap_colors) {
    throw Error(ErrorCode::CapExceeded, std::to_string(cc.k) + " colors exceed cap " + std::to_string(options.cap_colors));
  }

  RainbowCertificate cert;
  cert.order = n;
  if (!options.witnesses && kernels::fits(g, cc.k)) {
    kernels::ColorMasks masks(g, cc.colors, cc.k);
    cert.failing_pair =
        options.parallel ? kernels::least_failing_pair_parallel(masks) : kernels::least_failing_pair_serial(masks);
    cert.connected = !cert.failing_pair.has_value();
    return cert;
  }

  // General search, one source per task. Each source only needs the vertices
  // above it; witnesses for (u, w) come from the search rooted at u.
  const auto sources = static_cast<std::int64_t>(n);
  std::vector<std::optional<Vertex>> first_missing(n);
  if (options.witnesses && n >= 2) cert.witnesses.resize(n * (n - 1) / 2);
#pragma omp parallel if (options.parallel)
  {
    StateSearch search(g, cc.wide, cc.k);
    std::vector<bool> targets(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < sources; ++s) {
      auto src = static_cast<Vertex>(s);
      for (Vertex v = 0; v < n; ++v) targets[v] = v > src;
      search.run(src, targets, options.witnesses);
      for (Vertex w = src + 1; w < n; ++w) {
        if (!search.reached(w)) {
          first_missing[src] = w;
          break;
        }
        if (options.witnesses) cert.witnesses[RainbowCertificate::pair_index(n, src, w)] = search.path_to(w);
      }
    }
  }
  for (Vertex s = 0; s < n; ++s) {
    if (first_missing[s]) {
      cert.failing_pair = VertexPair{s, *first_missing[s]};
      cert.witnesses.clear();
      return cert;
    }
  }
  cert.connected = true;
  return cert;
}

std::optional<Path> rainbow_path(const Graph& g, const EdgeColoring& coloring, Vertex u, Vertex w,
                                 std::size_t cap_colors) {
  check_cover(g, coloring);
  if (u >= g.order() || w >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "rainbow_path endpoint");
  if (u == w) return Path{u};
  if (coloring.all_colors_distinct()) {
    BfsLayers layers = bfs_layers(g, u);
    if (layers.dist[w] == kUnreachable) return std::nullopt;
    Path p{w};
    for (Vertex cur = w; cur != u;) {
      for (Vertex x : g.neighbors(cur)) {
        if (layers.dist[x] + 1 == layers.dist[cur]) {
          cur = x;
          break;
        }
      }
      p.push_back(cur);
    }
    std::reverse(p.begin(), p.end());
    return p;
  }
  Compressed cc = compress(coloring);
  if (cc.k > cap_colors) {
    throw Error(ErrorCode::CapExceeded, std::to_string(cc.k) + " colors exceed cap " + std::to_string(cap_colors));
  }
  StateSearch search(g, cc.wide, cc.k);
  std::vector<bool> targets(g.order(), false);
  targets[w] = true;
  search.run(u, targets, true);
  if (!search.reached(w)) return std::nullopt;
  return search.path_to(w);
}

std::size_t count_failing_pairs(const Graph& g, const EdgeColoring& coloring, std::size_t cap_colors) {
  check_cover(g, coloring);
  Compressed cc = compress(coloring);
  if (coloring.all_colors_distinct()) {
    auto comps = components(g);
    std::size_t n = g.order();
    std::size_t same = 0;
    for (const auto& c : comps) same += c.size() * (c.size() - 1) / 2;
    return n * (n - 1) / 2 - same;
  }
  if (cc.k > cap_colors) {
    throw Error(ErrorCode::CapExceeded, std::to_string(cc.k) + " colors exceed cap " + std::to_string(cap_colors));
  }
  if (kernels::fits(g, cc.k)) {
    kernels::ColorMasks masks(g, cc.colors, cc.k);
    return kernels::failing_pair_count_parallel(masks);
  }
  std::size_t total = 0;
  StateSearch search(g, cc.wide, cc.k);
  std::vector<bool> targets(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex v = 0; v < g.order(); ++v) targets[v] = v > s;
    search.run(s, targets, false);
    for (Vertex w = s + 1; w < g.order(); ++w) total += search.reached(w) ? 0 : 1;
  }
  return total;
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& coloring, const Path& path, Vertex u, Vertex w) {
  if (path.empty() || path.front() != u || path.back() != w) return false;
  if (path.size() - 1 > coloring.color_count()) return false;
  std::vector<Vertex> seen_v(path.begin(), path.end());
  std::sort(seen_v.begin(), seen_v.end());
  if (std::adjacent_find(seen_v.begin(), seen_v.end()) != seen_v.end()) return false;
  std::vector<Color> seen_c;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto e = g.edge_id(path[i], path[i + 1]);
    if (!e) return false;
    seen_c.push_back(coloring.color_of(*e));
  }
  std::sort(seen_c.begin(), seen_c.end());
  return std::adjacent_find(seen_c.begin(), seen_c.end()) == seen_c.end();
}

bool certificate_valid(const Graph& g, const EdgeColoring& coloring, const RainbowCertificate& cert) {
  if (!cert.connected) return false;
  const std::size_t n = g.order();
  if (n >= 2 && cert.witnesses.size() != n * (n - 1) / 2) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (!is_rainbow_path(g, coloring, cert.witness(u, w), u, w)) return false;
    }
  }
  return true;
}

}  // namespace rainbow

#pragma once

// Shared test helpers: compact graph builders, seeded random generators and
// brute-force oracles that do not reuse the library's search code.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reeb/crossings.hpp"
#include "reeb/graph.hpp"
#include "reeb/subdivide.hpp"

namespace reeb::test {

using GraphPtr = std::shared_ptr<const ReebGraph>;

inline GraphPtr make(const std::vector<std::pair<std::string, std::string>>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<VertexSpec> specs;
  for (const auto& [id, h] : vertices) specs.push_back({id, parse_rational(h)});
  return std::make_shared<const ReebGraph>(std::move(specs), edges);
}

inline GraphPtr make_int(const std::vector<long>& heights,
                         const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSpec> specs;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    specs.push_back({"v" + std::to_string(i), Rational(heights[i])});
  }
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back(Edge{static_cast<VertexIndex>(a), static_cast<VertexIndex>(b)});
  return std::make_shared<const ReebGraph>(std::move(specs), std::move(es));
}

/// Cycle through the given heights in order (consecutive heights must differ).
inline GraphPtr cycle(const std::vector<long>& heights) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(heights.size());
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return make_int(heights, edges);
}

/// Alternating cycle with n vertices (n even) on heights 0 and 1.
inline GraphPtr alternating_cycle(int n) {
  std::vector<long> h;
  for (int i = 0; i < n; ++i) h.push_back(i % 2 == 0 ? 1 : 0);
  return cycle(h);
}

// ---------------------------------------------------------------- random

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Connected graph with n vertices, heights in [0, hmax], a random spanning
/// tree plus `extra` further edges. Edges never join equal heights.
inline GraphPtr random_connected(std::mt19937& rng, int n, long hmax, int extra) {
  std::vector<long> h(n);
  for (int i = 0; i < n; ++i) h[i] = uniform(rng, 0, hmax);
  // Ensure a second height exists so a tree can be formed.
  if (n > 1 && std::all_of(h.begin(), h.end(), [&](long v) { return v == h[0]; })) {
    h[n - 1] = (h[0] + 1) % (hmax + 1);
  }
  std::vector<std::pair<int, int>> edges;
  // Attach each vertex to an earlier one of different height; restart the
  // draw if none is available.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    edges.clear();
    bool ok = true;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n && ok; ++i) {
      std::vector<int> cand;
      for (int j = 0; j < i; ++j) {
        if (h[order[j]] != h[order[i]]) cand.push_back(order[j]);
      }
      if (cand.empty()) {
        ok = false;
        break;
      }
      edges.push_back({cand[uniform(rng, 0, static_cast<long>(cand.size()) - 1)], order[i]});
    }
    if (ok) break;
    for (int i = 0; i < n; ++i) h[i] = uniform(rng, 0, hmax);
    if (n > 1) h[n - 1] = (h[0] + 1) % (hmax + 1);
  }
  for (int e = 0; e < extra; ++e) {
    int a = static_cast<int>(uniform(rng, 0, n - 1));
    int b = static_cast<int>(uniform(rng, 0, n - 1));
    if (h[a] != h[b]) edges.push_back({a, b});
  }
  return make_int(h, edges);
}

/// Random path with n vertices and arbitrary distinct-neighbour heights.
inline GraphPtr random_path(std::mt19937& rng, int n, long hmax) {
  std::vector<long> h(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    do {
      h[i] = uniform(rng, 0, hmax);
    } while (i > 0 && h[i] == h[i - 1]);
    if (i > 0) edges.push_back({i - 1, i});
  }
  return make_int(h, edges);
}

/// Random cycle with n >= 3 vertices; consecutive heights differ.
inline GraphPtr random_cycle(std::mt19937& rng, int n, long hmax) {
  if (n % 2 == 1) hmax = std::max(hmax, 2L);  // an odd cycle needs three heights
  std::vector<long> h(n);
  while (true) {
    for (int i = 0; i < n; ++i) {
      do {
        h[i] = uniform(rng, 0, hmax);
      } while (i > 0 && h[i] == h[i - 1]);
    }
    if (h[n - 1] != h[0]) break;
  }
  return cycle(h);
}

/// Random caterpillar: a spine of `spine` vertices, each with up to
/// `max_legs` legs while keeping every spine degree at most 3.
inline GraphPtr random_caterpillar(std::mt19937& rng, int spine, long hmax) {
  std::vector<long> h;
  std::vector<std::pair<int, int>> edges;
  auto fresh = [&](long avoid) {
    long v;
    do {
      v = uniform(rng, 0, hmax);
    } while (v == avoid);
    return v;
  };
  for (int i = 0; i < spine; ++i) {
    h.push_back(i == 0 ? uniform(rng, 0, hmax) : fresh(h[i - 1]));
    if (i > 0) edges.push_back({i - 1, i});
  }
  for (int i = 0; i < spine; ++i) {
    const int spine_deg = (i > 0) + (i + 1 < spine);
    const int room = 3 - spine_deg;
    const int legs = spine_deg == 2 ? static_cast<int>(uniform(rng, 0, 1))
                                    : static_cast<int>(uniform(rng, 1, room));
    for (int j = 0; j < legs; ++j) {
      h.push_back(fresh(h[i]));
      edges.push_back({i, static_cast<int>(h.size()) - 1});
    }
  }
  return make_int(h, edges);
}

// ---------------------------------------------------------------- oracles

/// Independent inversion count of a per-level ordering.
inline long long oracle_layered_count(const ReebGraph& g2,
                                      const std::vector<std::vector<VertexIndex>>& ord) {
  std::vector<long> pos(g2.vertex_count());
  for (const auto& level : ord) {
    for (std::size_t i = 0; i < level.size(); ++i) pos[level[i]] = static_cast<long>(i);
  }
  long long total = 0;
  const auto edges = g2.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      VertexIndex a0 = g2.lower(i), a1 = g2.upper(i), b0 = g2.lower(j), b1 = g2.upper(j);
      if (g2.height(a0) != g2.height(b0)) continue;
      if (a0 == b0 || a1 == b1) continue;
      if ((pos[a0] - pos[b0]) * (pos[a1] - pos[b1]) < 0) ++total;
    }
  }
  return total;
}

/// Minimum layered crossing count over every per-level permutation of the
/// subdivided graph, by plain enumeration.
inline long long oracle_min_crossings(const ReebGraph& g) {
  const SubdivisionMap m = subdivide(g);
  const ReebGraph& g2 = *m.subdivided;
  const LevelAssignment lv = levels(g2);
  std::vector<std::vector<VertexIndex>> ord(lv.count());
  for (VertexIndex v = 0; v < g2.vertex_count(); ++v) ord[lv.level[v]].push_back(v);
  long long best = -1;
  std::function<void(std::size_t)> rec = [&](std::size_t l) {
    if (l == ord.size()) {
      const long long c = oracle_layered_count(g2, ord);
      if (best < 0 || c < best) best = c;
      return;
    }
    std::sort(ord[l].begin(), ord[l].end());
    do {
      rec(l + 1);
    } while (std::next_permutation(ord[l].begin(), ord[l].end()));
  };
  rec(0);
  return best;
}

/// Crossing-free drawing of the original graph with wiggly edges: each level
/// of the subdivided graph gets random increasing x values in the order
/// given by `ord` (which must be crossing-free), and every strip gets a row of
/// random increasing bends at mid-height.
inline Drawing random_curved_drawing(std::mt19937& rng, const SubdivisionMap& m,
                                     const LevelOrdering& ord) {
  const ReebGraph& g2 = *m.subdivided;
  std::vector<Rational> x(g2.vertex_count());
  std::vector<long> pos(g2.vertex_count());
  auto random_increasing = [&](std::size_t count) {
    std::vector<Rational> out;
    Rational at = Rational(uniform(rng, -3, 3)) / uniform(rng, 1, 4);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(at);
      at += Rational(uniform(rng, 1, 12)) / uniform(rng, 1, 4);
    }
    return out;
  };
  for (const auto& level : ord.levels) {
    const auto xs = random_increasing(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      x[level[i]] = xs[i];
      pos[level[i]] = static_cast<long>(i);
    }
  }
  std::vector<std::vector<EdgeIndex>> strips(ord.levels.size());
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e) {
    strips[static_cast<std::size_t>(to_double(g2.height(g2.lower(e))))].push_back(e);
  }
  std::vector<std::vector<Point>> bends(g2.edge_count());
  for (std::size_t l = 0; l < strips.size(); ++l) {
    auto& s = strips[l];
    std::sort(s.begin(), s.end(), [&](EdgeIndex a, EdgeIndex b) {
      return std::pair(pos[g2.lower(a)], pos[g2.upper(a)]) <
             std::pair(pos[g2.lower(b)], pos[g2.upper(b)]);
    });
    const auto xs = random_increasing(s.size());
    const Rational mid = Rational(static_cast<long>(2 * l + 1)) / 2;
    for (std::size_t i = 0; i < s.size(); ++i) bends[s[i]] = {{xs[i], mid}};
  }
  return unsubdivide_drawing(Drawing(m.subdivided, std::move(x), std::move(bends)), m);
}

/// Wiggly redrawing of a crossing-free drawing with the same level orders.
inline Drawing random_curved_drawing(std::mt19937& rng, const Drawing& planar) {
  const SubdivisionMap m = subdivide(planar.graph_ptr());
  const Drawing d2 = subdivide_drawing(planar, m);
  return random_curved_drawing(rng, m, LevelOrdering{level_orders(d2)});
}

/// Product of level-width factorials of the subdivided graph, capped.
inline double search_space(const ReebGraph& g) {
  const SubdivisionMap m = subdivide(g);
  const LevelAssignment lv = levels(*m.subdivided);
  std::vector<int> width(lv.count(), 0);
  for (int l : lv.level) ++width[l];
  double total = 1;
  for (int w : width) {
    for (int i = 2; i <= w; ++i) total *= i;
  }
  return total;
}

}  // namespace reeb::test

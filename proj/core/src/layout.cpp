#include "reeb/layout.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace reeb {

namespace {

[[noreturn]] void wrong_shape(const std::string& message) {
  throw Error(ErrorCode::WrongShape, message);
}

VertexIndex least_id(const ReebGraph& g, const std::vector<VertexIndex>& vs) {
  return *std::min_element(vs.begin(), vs.end(),
                           [&](VertexIndex a, VertexIndex b) { return g.id(a) < g.id(b); });
}

// Walks a single cycle from `start`, first along the incident edge whose other
// endpoint has the least id.
std::vector<VertexIndex> traverse_cycle(const ReebGraph& g, VertexIndex start) {
  const auto inc = g.incident(start);
  EdgeIndex via = inc[0];
  for (EdgeIndex e : inc) {
    if (g.id(g.other(e, start)) < g.id(g.other(via, start))) via = e;
  }
  std::vector<VertexIndex> seq{start};
  VertexIndex cur = g.other(via, start);
  while (cur != start) {
    seq.push_back(cur);
    const auto ci = g.incident(cur);
    const EdgeIndex next = ci[0] == via ? ci[1] : ci[0];
    via = next;
    cur = g.other(via, cur);
  }
  return seq;
}

std::vector<VertexIndex> vertices_on_level(const LevelAssignment& lv, int level) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < lv.level.size(); ++v) {
    if (lv.level[v] == level) out.push_back(v);
  }
  return out;
}

void require_single_cycle(const ReebGraph& g, const char* op) {
  if (classify_shape(g) != ShapeClass::SingleCycle) {
    wrong_shape(std::string(op) + " requires a single cycle");
  }
}

// Per-level orders from a global rank, then realized and mapped back.
Drawing realize_ranked(const SubdivisionMap& m, const std::vector<std::size_t>& rank) {
  const ReebGraph& g2 = *m.subdivided;
  LevelOrdering ord = ordering_by_id(g2);
  for (auto& level : ord.levels) {
    std::sort(level.begin(), level.end(),
              [&](VertexIndex a, VertexIndex b) { return rank[a] < rank[b]; });
  }
  return unsubdivide_drawing(realize_layered(m.subdivided, ord), m);
}

}  // namespace

Drawing layout_path(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  if (classify_shape(g) != ShapeClass::Path) wrong_shape("layout_path requires a path");
  const std::size_t n = g.vertex_count();
  std::vector<Rational> x(n);
  if (n == 0) return Drawing(gp, std::move(x));

  const DegreeProfile deg = degree_profile(g);
  std::vector<VertexIndex> ends;
  for (VertexIndex v = 0; v < n; ++v) {
    if (deg.total[v] <= 1) ends.push_back(v);
  }
  VertexIndex cur = least_id(g, ends);
  std::optional<EdgeIndex> via;
  for (long i = 1;; ++i) {
    x[cur] = Rational(i);
    std::optional<EdgeIndex> next;
    for (EdgeIndex e : g.incident(cur)) {
      if (e != via) next = e;
    }
    if (!next) break;
    via = next;
    cur = g.other(*next, cur);
  }
  return Drawing(gp, std::move(x));
}

Drawing layout_caterpillar(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  const ShapeClass shape = classify_shape(g);
  if (shape == ShapeClass::Path) return layout_path(gp);
  if (shape != ShapeClass::Caterpillar) wrong_shape("layout_caterpillar requires a caterpillar");

  const std::size_t n = g.vertex_count();
  const DegreeProfile deg = degree_profile(g);
  auto is_spine = [&](VertexIndex v) { return deg.total[v] > 1; };
  std::vector<VertexIndex> spine_ends;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!is_spine(v)) continue;
    if (deg.total[v] > 3) {
      wrong_shape("spine vertex '" + g.id(v) + "' has degree " + std::to_string(deg.total[v]) +
                  ", caterpillar layout allows at most 3");
    }
    int inner = 0;
    for (EdgeIndex e : g.incident(v)) inner += is_spine(g.other(e, v));
    if (inner <= 1) spine_ends.push_back(v);
  }

  // Spine left to right.
  std::vector<VertexIndex> spine;
  std::vector<Rational> x(n);
  VertexIndex cur = least_id(g, spine_ends);
  VertexIndex prev = cur;
  while (true) {
    spine.push_back(cur);
    x[cur] = Rational(static_cast<long>(spine.size()));
    std::optional<VertexIndex> next;
    for (EdgeIndex e : g.incident(cur)) {
      const VertexIndex w = g.other(e, cur);
      if (is_spine(w) && w != prev) next = w;
    }
    if (!next) break;
    prev = cur;
    cur = *next;
  }

  const Rational quarter(1, 4);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const VertexIndex v = spine[i];
    std::vector<VertexIndex> legs;
    for (EdgeIndex e : g.incident(v)) {
      if (!is_spine(g.other(e, v))) legs.push_back(g.other(e, v));
    }
    std::sort(legs.begin(), legs.end(),
              [&](VertexIndex a, VertexIndex b) { return g.id(a) < g.id(b); });

    // The first leg is vertical; further legs lean to the side without a
    // spine edge, so no two segments at v are collinear.
    std::vector<Rational> offsets{Rational(0)};
    if (spine.size() == 1) {
      offsets.push_back(quarter);
      offsets.push_back(-quarter);
    } else if (i == 0) {
      offsets.push_back(-quarter);
    } else if (i + 1 == spine.size()) {
      offsets.push_back(quarter);
    }
    for (std::size_t j = 0; j < legs.size(); ++j) x[legs[j]] = x[v] + offsets[j];
  }
  return Drawing(gp, std::move(x));
}

CycleDecomposition top_down_iteration_number(const ReebGraph& g) {
  require_single_cycle(g, "top_down_iteration_number");
  const LevelAssignment lv = levels(g);
  const int top = lv.count() - 1;
  CycleDecomposition out;
  out.top = lv.heights.back();
  out.bottom = lv.heights.front();

  const std::vector<VertexIndex> seq =
      traverse_cycle(g, least_id(g, vertices_on_level(lv, top)));
  const std::size_t n = seq.size();
  auto symbol = [&](VertexIndex v) { return lv.level[v] == top ? 1 : lv.level[v] == 0 ? -1 : 0; };

  // t_1 opens a block: its previous extreme symbol, cyclically, is B.
  std::size_t first = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (symbol(seq[i]) != 1) continue;
    std::size_t j = (i + n - 1) % n;
    while (symbol(seq[j]) == 0) j = (j + n - 1) % n;
    if (symbol(seq[j]) == -1) {
      first = i;
      break;
    }
  }
  out.cycle.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.cycle.push_back(seq[(first + i) % n]);

  std::vector<std::size_t> key_pos;
  int last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = symbol(out.cycle[i]);
    if (s != 0 && s != last) {
      key_pos.push_back(i);
      out.keys.push_back(out.cycle[i]);
      last = s;
    }
  }
  out.k = out.keys.size() / 2;
  for (std::size_t i = 0; i < key_pos.size(); ++i) {
    const std::size_t from = key_pos[i] + 1;
    const std::size_t to = i + 1 < key_pos.size() ? key_pos[i + 1] : n;
    out.paths.emplace_back(out.cycle.begin() + static_cast<long>(from),
                           out.cycle.begin() + static_cast<long>(to));
  }
  return out;
}

Drawing layout_bowtie(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  require_single_cycle(g, "layout_bowtie");
  const LevelAssignment lv = levels(g);
  if (lv.count() != 2) wrong_shape("layout_bowtie requires an alternating cycle on two levels");

  const std::vector<VertexIndex> seq = traverse_cycle(g, least_id(g, vertices_on_level(lv, 1)));
  const std::size_t n = seq.size();
  const std::size_t half = n / 2;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[seq[i]] = i < half ? Rational(static_cast<long>(i + 1))
                         : Rational(static_cast<long>(n - i)) + Rational(1, 2);
  }

  std::vector<std::vector<Point>> bends(g.edge_count());
  if (n == 2) {
    // Two parallel edges: bend the second one off the first.
    const Rational ymid = (lv.heights[0] + lv.heights[1]) / 2;
    bends[1].push_back({(x[0] + x[1]) / 2 + Rational(1, 4), ymid});
  }
  return Drawing(gp, std::move(x), std::move(bends));
}

Drawing layout_cycle_unique_extrema(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  require_single_cycle(g, "layout_cycle_unique_extrema");
  const LevelAssignment lv = levels(g);
  const auto tops = vertices_on_level(lv, lv.count() - 1);
  const auto bottoms = vertices_on_level(lv, 0);
  if (tops.size() != 1 || bottoms.size() != 1) {
    wrong_shape("layout_cycle_unique_extrema requires a unique top and a unique bottom vertex");
  }

  const SubdivisionMap m = subdivide(gp);
  const ReebGraph& g2 = *m.subdivided;
  const VertexIndex a = m.image[tops[0]];
  const VertexIndex z = m.image[bottoms[0]];
  const std::vector<VertexIndex> seq = traverse_cycle(g2, a);
  const std::size_t n = seq.size();
  const std::size_t zpos =
      static_cast<std::size_t>(std::find(seq.begin(), seq.end(), z) - seq.begin());

  // The second path (walked backwards from A) goes left of the first.
  std::vector<std::size_t> rank(g2.vertex_count(), 0);
  std::size_t r = 0;
  rank[a] = r++;
  for (std::size_t i = n - 1; i > zpos; --i) rank[seq[i]] = r++;
  for (std::size_t i = 1; i < zpos; ++i) rank[seq[i]] = r++;
  rank[z] = r;
  return realize_ranked(m, rank);
}

Drawing solve_type2(const Type2Subproblem& p) {
  if (!p.graph) wrong_shape("type-2 subproblem has no graph");
  const ReebGraph& g = *p.graph;
  if (p.r.size() < 2 || p.g.size() < 2) wrong_shape("type-2 paths need at least one edge");
  const Rational& t = g.height(p.r.front());
  const Rational& b = g.height(p.r.back());
  if (!(b < t) || g.height(p.g.front()) != b || g.height(p.g.back()) != t) {
    wrong_shape("type-2 corners must be t1, t2 on the top height and b1, b2 on the bottom height");
  }

  std::vector<VertexIndex> all(p.r);
  all.insert(all.end(), p.g.begin(), p.g.end());
  {
    std::vector<VertexIndex> sorted(all);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      wrong_shape("type-2 paths must be vertex-disjoint");
    }
  }
  Rational gap = t - b;
  for (const auto* path : {&p.r, &p.g}) {
    for (std::size_t i = 1; i + 1 < path->size(); ++i) {
      const Rational& h = g.height((*path)[i]);
      if (!(b < h && h < t)) {
        wrong_shape("type-2 interior vertex '" + g.id((*path)[i]) +
                    "' must lie strictly between the corner heights");
      }
      gap = std::min(gap, Rational(h - b));
    }
  }

  std::vector<VertexSpec> specs;
  std::vector<VertexIndex> local(g.vertex_count(), 0);
  for (VertexIndex v : all) {
    local[v] = specs.size();
    specs.push_back(g.vertices()[v]);
  }
  std::vector<Edge> edges;
  for (const auto* path : {&p.r, &p.g}) {
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      const VertexIndex u = (*path)[i], w = (*path)[i + 1];
      const auto inc = g.incident(u);
      if (std::none_of(inc.begin(), inc.end(), [&](EdgeIndex e) { return g.other(e, u) == w; })) {
        wrong_shape("type-2 path step '" + g.id(u) + "' -> '" + g.id(w) + "' is not an edge");
      }
      edges.push_back(Edge{local[u], local[w]});
    }
  }
  auto sub = std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));

  // r's interior hugs x = 0 and g's interior hugs x = 1, close enough that
  // only r's last edge and g's first edge can meet.
  const Rational delta = gap / (4 * (t - b));
  std::vector<Rational> x(sub->vertex_count());
  const long rn = static_cast<long>(p.r.size()) - 1;
  const long gn = static_cast<long>(p.g.size()) - 1;
  x[local[p.r.front()]] = 0;
  x[local[p.r.back()]] = 1;
  for (long i = 1; i < rn; ++i) x[local[p.r[i]]] = delta * Rational(i, rn);
  x[local[p.g.front()]] = 0;
  x[local[p.g.back()]] = 1;
  for (long i = 1; i < gn; ++i) x[local[p.g[i]]] = 1 - delta + delta * Rational(i, gn);
  return Drawing(std::move(sub), std::move(x));
}

namespace {

// Merges the interiors of two paths F and R sharing both ends into one
// left-to-right sequence so that the number of sides swaps is minimal. With
// x given by the merged rank both paths are x-monotone, and every swap is one
// crossing.
struct MergePlan {
  long long cost = std::numeric_limits<long long>::max();
  std::vector<VertexIndex> sequence;  // interior vertices, left to right
};

MergePlan merge_paths(const ReebGraph& g2, const std::vector<VertexIndex>& f,
                      const std::vector<VertexIndex>& r) {
  const std::size_t fi = f.size() - 2;
  const std::size_t ri = r.size() - 2;
  constexpr long long inf = std::numeric_limits<long long>::max() / 4;
  // State (i, j, s): i of F and j of R placed, s = last side (0 none, 1 F
  // above, 2 F below). Choice 0 = F vertex placed last, 1 = R vertex.
  const std::size_t W = ri + 1;
  std::vector<std::array<long long, 3>> cost((fi + 1) * W, {inf, inf, inf});
  std::vector<std::array<std::pair<int, int>, 3>> from((fi + 1) * W);
  cost[0][0] = 0;

  auto level = [&](VertexIndex v) { return g2.height(v); };
  auto relax = [&](std::size_t idx, int s, long long c, int prev_s, int choice) {
    if (c < cost[idx][s]) {
      cost[idx][s] = c;
      from[idx][s] = {prev_s, choice};
    }
  };
  for (std::size_t i = 0; i <= fi; ++i) {
    for (std::size_t j = 0; j <= ri; ++j) {
      for (int s = 0; s < 3; ++s) {
        const long long c = cost[i * W + j][s];
        if (c >= inf) continue;
        if (i < fi) {
          const Rational lo = std::min(level(r[j]), level(r[j + 1]));
          const int side = level(f[i + 1]) <= lo ? 2 : 1;
          relax((i + 1) * W + j, side, c + (s != 0 && s != side), s, 0);
        }
        if (j < ri) {
          const Rational lo = std::min(level(f[i]), level(f[i + 1]));
          const int side = level(r[j + 1]) <= lo ? 1 : 2;
          relax(i * W + j + 1, side, c + (s != 0 && s != side), s, 1);
        }
      }
    }
  }

  MergePlan plan;
  const std::size_t end = fi * W + ri;
  int s = 0;
  for (int t = 0; t < 3; ++t) {
    if (cost[end][t] < cost[end][s]) s = t;
  }
  plan.cost = cost[end][s];
  std::size_t i = fi, j = ri;
  while (i + j > 0) {
    const auto [prev_s, choice] = from[i * W + j][s];
    if (choice == 0) {
      plan.sequence.push_back(f[i]);
      --i;
    } else {
      plan.sequence.push_back(r[j]);
      --j;
    }
    s = prev_s;
  }
  std::reverse(plan.sequence.begin(), plan.sequence.end());
  return plan;
}

}  // namespace

Drawing layout_cycle(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  require_single_cycle(g, "layout_cycle");
  {
    const LevelAssignment lv = levels(g);
    if (vertices_on_level(lv, 0).size() == 1 &&
        vertices_on_level(lv, lv.count() - 1).size() == 1) {
      return layout_cycle_unique_extrema(gp);
    }
  }

  const SubdivisionMap m = subdivide(gp);
  const ReebGraph& g2 = *m.subdivided;
  const LevelAssignment lv2 = levels(g2);
  const std::vector<VertexIndex> seq = traverse_cycle(g2, 0);
  const std::size_t n = seq.size();

  // Cut the cycle at a top vertex A and a bottom vertex Z into two paths and
  // keep the cheapest merge.
  MergePlan best;
  VertexIndex best_a = 0, best_z = 0;
  for (std::size_t ai = 0; ai < n; ++ai) {
    if (lv2.level[seq[ai]] != lv2.count() - 1) continue;
    for (std::size_t zi = 0; zi < n; ++zi) {
      if (lv2.level[seq[zi]] != 0) continue;
      std::vector<VertexIndex> f, r;
      for (std::size_t i = ai;; i = (i + 1) % n) {
        f.push_back(seq[i]);
        if (i == zi) break;
      }
      for (std::size_t i = ai;; i = (i + n - 1) % n) {
        r.push_back(seq[i]);
        if (i == zi) break;
      }
      MergePlan plan = merge_paths(g2, f, r);
      if (plan.cost < best.cost) {
        best = std::move(plan);
        best_a = seq[ai];
        best_z = seq[zi];
      }
    }
  }

  std::vector<std::size_t> rank(g2.vertex_count(), 0);
  rank[best_a] = 0;
  for (std::size_t i = 0; i < best.sequence.size(); ++i) rank[best.sequence[i]] = i + 1;
  rank[best_z] = best.sequence.size() + 1;
  return realize_ranked(m, rank);
}

Drawing layout_exact(std::shared_ptr<const ReebGraph> gp, std::optional<std::uint64_t> budget) {
  require_connected(*gp, "layout_exact");
  const ExactResult res = exact_rgcn(gp, budget);
  return unsubdivide_drawing(realize_layered(res.subdivision.subdivided, res.witness),
                             res.subdivision);
}

Drawing layout_heuristic(std::shared_ptr<const ReebGraph> gp) {
  const SubdivisionMap m = subdivide(gp);
  return unsubdivide_drawing(realize_layered(m.subdivided, barycenter_ordering(*m.subdivided)), m);
}

Drawing layout_auto(std::shared_ptr<const ReebGraph> gp, std::uint64_t budget) {
  require_connected(*gp, "layout_auto");
  switch (classify_shape(*gp)) {
    case ShapeClass::Path:
      return layout_path(gp);
    case ShapeClass::Caterpillar:
      try {
        return layout_caterpillar(gp);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WrongShape) throw;
      }
      break;
    case ShapeClass::SingleCycle:
      return layout_cycle(gp);
    case ShapeClass::Tree:
    case ShapeClass::General:
      break;
  }
  try {
    return layout_exact(gp, budget);
  } catch (const BudgetExhausted&) {
    return layout_heuristic(gp);
  }
}

}  // namespace reeb

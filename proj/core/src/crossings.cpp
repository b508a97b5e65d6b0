#include "reeb/crossings.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace reeb {

namespace {

struct EdgeGeom {
  std::vector<Point> pts;
  Rational lo, hi;
  Rational xmin, xmax;
};

[[noreturn]] void degenerate(const ReebGraph& g, EdgeIndex a, EdgeIndex b, const char* what,
                             const Rational& y) {
  auto name = [&](EdgeIndex e) {
    return std::to_string(e) + " (" + g.id(g.edge(e).u) + "," + g.id(g.edge(e).v) + ")";
  };
  throw Error(ErrorCode::Degenerate, std::string(what) + " between edges " + name(a) + " and " +
                                         name(b) + " at height " + to_string(y));
}

// Appends the crossings of one pair; the pair's open height ranges overlap.
void cross_pair(const ReebGraph& g, EdgeIndex a, EdgeIndex b, const EdgeGeom& ga,
                const EdgeGeom& gb, std::vector<Crossing>& out) {
  const Rational lo = std::max(ga.lo, gb.lo);
  const Rational hi = std::min(ga.hi, gb.hi);

  std::vector<Rational> ys{lo, hi};
  for (const EdgeGeom* ge : {&ga, &gb}) {
    for (const Point& p : ge->pts) {
      if (p.y > lo && p.y < hi) ys.push_back(p.y);
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Rational> f(ys.size());
  std::vector<int> s(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    f[i] = x_at(ga.pts, ys[i]) - x_at(gb.pts, ys[i]);
    s[i] = sign(f[i]);
  }

  const std::size_t m = ys.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] == 0 && s[i + 1] == 0) degenerate(g, a, b, "overlap", ys[i]);
  }
  for (std::size_t i = 0; i <= m; ++i) {
    if (s[i] == 0) {
      if (i == 0 || i == m) continue;  // shared endpoint
      if (s[i - 1] == s[i + 1]) degenerate(g, a, b, "tangency", ys[i]);
      out.push_back({a, b, {x_at(ga.pts, ys[i]), ys[i]}});
    } else if (i < m && s[i + 1] != 0 && s[i] != s[i + 1]) {
      const Rational y = ys[i] + (ys[i + 1] - ys[i]) * f[i] / (f[i] - f[i + 1]);
      out.push_back({a, b, {x_at(ga.pts, y), y}});
    }
  }
}

}  // namespace

CrossingCertificate count_crossings_geometric(const Drawing& d) {
  const ReebGraph& g = d.graph();
  const std::size_t m = g.edge_count();
  std::vector<EdgeGeom> geom(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    EdgeGeom& ge = geom[e];
    ge.pts = d.polyline(e);
    ge.lo = ge.pts.front().y;
    ge.hi = ge.pts.back().y;
    ge.xmin = ge.xmax = ge.pts.front().x;
    for (const Point& p : ge.pts) {
      if (p.x < ge.xmin) ge.xmin = p.x;
      if (p.x > ge.xmax) ge.xmax = p.x;
    }
  }

  std::vector<EdgeIndex> order(m);
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeIndex a, EdgeIndex b) { return geom[a].lo < geom[b].lo; });

  CrossingCertificate cert;
  for (std::size_t i = 0; i < m; ++i) {
    const EdgeIndex a = order[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const EdgeIndex b = order[j];
      if (!(geom[b].lo < geom[a].hi)) break;
      if (geom[a].xmax < geom[b].xmin || geom[b].xmax < geom[a].xmin) continue;
      const EdgeIndex first = std::min(a, b);
      const EdgeIndex second = std::max(a, b);
      cross_pair(g, first, second, geom[first], geom[second], cert.crossings);
    }
  }
  std::sort(cert.crossings.begin(), cert.crossings.end(), [](const Crossing& p, const Crossing& q) {
    if (p.first != q.first) return p.first < q.first;
    if (p.second != q.second) return p.second < q.second;
    return p.at.y < q.at.y;
  });
  cert.count = cert.crossings.size();
  return cert;
}

void check_layered(const ReebGraph& g2, const LevelOrdering& ord) {
  const LevelAssignment lv = levels(g2);
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e) {
    if (lv.level[g2.upper(e)] != lv.level[g2.lower(e)] + 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(e) + " does not join consecutive levels");
    }
  }
  if (ord.levels.size() != static_cast<std::size_t>(lv.count())) {
    throw Error(ErrorCode::InvalidArgument, "ordering has " + std::to_string(ord.levels.size()) +
                                                " levels, graph has " + std::to_string(lv.count()));
  }
  std::vector<int> seen(g2.vertex_count(), 0);
  for (std::size_t l = 0; l < ord.levels.size(); ++l) {
    for (VertexIndex v : ord.levels[l]) {
      if (v >= g2.vertex_count() || lv.level[v] != static_cast<int>(l) || seen[v]++) {
        throw Error(ErrorCode::InvalidArgument,
                    "ordering misplaces or repeats a vertex on level " + std::to_string(l));
      }
    }
  }
  for (VertexIndex v = 0; v < g2.vertex_count(); ++v) {
    if (!seen[v]) throw Error(ErrorCode::InvalidArgument, "ordering omits vertex '" + g2.id(v) + "'");
  }
}

long long count_crossings_layered(const ReebGraph& g2, const LevelOrdering& ord) {
  check_layered(g2, ord);
  std::vector<std::size_t> pos(g2.vertex_count());
  for (const auto& level : ord.levels) {
    for (std::size_t i = 0; i < level.size(); ++i) pos[level[i]] = i;
  }
  const LevelAssignment lv = levels(g2);
  std::vector<std::vector<EdgeIndex>> strips(std::max(lv.count() - 1, 0));
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e) strips[lv.level[g2.lower(e)]].push_back(e);

  long long total = 0;
  for (const auto& strip : strips) {
    for (std::size_t i = 0; i < strip.size(); ++i) {
      const VertexIndex a0 = g2.lower(strip[i]), a1 = g2.upper(strip[i]);
      for (std::size_t j = i + 1; j < strip.size(); ++j) {
        const VertexIndex b0 = g2.lower(strip[j]), b1 = g2.upper(strip[j]);
        if (a0 == b0 || a1 == b1) continue;
        if ((pos[a0] < pos[b0]) != (pos[a1] < pos[b1])) ++total;
      }
    }
  }
  return total;
}

Drawing realize_layered(std::shared_ptr<const ReebGraph> g2p, const LevelOrdering& ord) {
  const ReebGraph& g2 = *g2p;
  check_layered(g2, ord);
  const long n = static_cast<long>(g2.vertex_count());

  std::vector<Rational> x(g2.vertex_count());
  for (const auto& level : ord.levels) {
    const long w = static_cast<long>(level.size());
    const Rational denom(2 * w * n * n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Rational idx(static_cast<long>(i));
      x[level[i]] = idx + idx / denom;
    }
  }

  std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> copies;
  for (EdgeIndex e = 0; e < g2.edge_count(); ++e) {
    copies[{g2.lower(e), g2.upper(e)}].push_back(e);
  }
  std::vector<std::vector<Point>> bends(g2.edge_count());
  for (const auto& [ends, group] : copies) {
    const auto [lo, hi] = ends;
    const Rational ymid = (g2.height(lo) + g2.height(hi)) / 2;
    const Rational xmid = (x[lo] + x[hi]) / 2;
    const long mult = static_cast<long>(group.size());
    for (std::size_t j = 1; j < group.size(); ++j) {
      bends[group[j]].push_back({xmid + Rational(static_cast<long>(j), 4 * mult), ymid});
    }
  }
  return Drawing(std::move(g2p), std::move(x), std::move(bends));
}

LevelOrdering ordering_by_id(const ReebGraph& g2) {
  const LevelAssignment lv = levels(g2);
  LevelOrdering ord;
  ord.levels.resize(lv.count());
  for (VertexIndex v = 0; v < g2.vertex_count(); ++v) ord.levels[lv.level[v]].push_back(v);
  for (auto& level : ord.levels) {
    std::sort(level.begin(), level.end(),
              [&](VertexIndex a, VertexIndex b) { return g2.id(a) < g2.id(b); });
  }
  return ord;
}

LevelOrdering barycenter_ordering(const ReebGraph& g2) {
  LevelOrdering ord = ordering_by_id(g2);
  const LevelAssignment lv = levels(g2);
  std::vector<double> pos(g2.vertex_count());
  auto refresh = [&](std::size_t l) {
    for (std::size_t i = 0; i < ord.levels[l].size(); ++i) pos[ord.levels[l][i]] = double(i);
  };
  for (std::size_t l = 0; l < ord.levels.size(); ++l) refresh(l);

  // Orders level l by the mean position of neighbours on level `ref`.
  auto sweep = [&](std::size_t l, int ref) {
    auto& level = ord.levels[l];
    std::vector<double> key(g2.vertex_count(), 0.0);
    for (VertexIndex v : level) {
      double sum = 0;
      int cnt = 0;
      for (EdgeIndex e : g2.incident(v)) {
        const VertexIndex w = g2.other(e, v);
        if (lv.level[w] == ref) {
          sum += pos[w];
          ++cnt;
        }
      }
      key[v] = cnt ? sum / cnt : pos[v];
    }
    std::sort(level.begin(), level.end(), [&](VertexIndex a, VertexIndex b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return g2.id(a) < g2.id(b);
    });
    refresh(l);
  };

  const std::size_t L = ord.levels.size();
  for (int round = 0; round < 10; ++round) {
    for (std::size_t l = 1; l < L; ++l) sweep(l, static_cast<int>(l) - 1);
    for (std::size_t l = L >= 2 ? L - 1 : 0; l-- > 0;) sweep(l, static_cast<int>(l) + 1);
  }
  return ord;
}

namespace {

// Depth-first branch and bound over per-level permutations.
class ExactSearch {
 public:
  ExactSearch(const ReebGraph& g2, std::optional<std::uint64_t> budget)
      : g2_(g2), budget_(budget), lv_(levels(g2)) {
    levels_.resize(lv_.count());
    for (VertexIndex v = 0; v < g2.vertex_count(); ++v) levels_[lv_.level[v]].push_back(v);
    down_.resize(g2.vertex_count());
    for (EdgeIndex e = 0; e < g2.edge_count(); ++e) down_[g2.upper(e)].push_back(g2.lower(e));
    pos_.assign(g2.vertex_count(), 0);
    current_.levels.resize(levels_.size());
  }

  void run(long long upper_bound) {
    bound_ = upper_bound;
    enter_level(0, 0);
  }

  bool found() const { return found_; }
  long long best() const { return bound_; }
  const LevelOrdering& witness() const { return best_order_; }
  std::uint64_t states() const { return states_; }

 private:
  struct Frame {
    std::vector<long long> c;  // c[i*w+j]: cost of vs[i] left of vs[j]
    std::vector<char> used;
    std::vector<long long> forced;  // cost already implied by placed vertices
  };

  void enter_level(std::size_t l, long long partial) {
    if (l == levels_.size()) {
      if (partial < bound_) {
        bound_ = partial;
        best_order_ = current_;
        found_ = true;
      }
      return;
    }
    const auto& vs = levels_[l];
    const std::size_t w = vs.size();
    Frame fr;
    fr.c.assign(w * w, 0);
    if (l > 0) {
      for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
          if (i == j) continue;
          long long cnt = 0;
          for (VertexIndex a : down_[vs[i]]) {
            for (VertexIndex b : down_[vs[j]]) {
              if (pos_[a] > pos_[b]) ++cnt;
            }
          }
          fr.c[i * w + j] = cnt;
        }
      }
    }
    fr.used.assign(w, 0);
    fr.forced.assign(w, 0);
    current_.levels[l].clear();
    place(l, fr, partial);
  }

  void place(std::size_t l, Frame& fr, long long partial) {
    const auto& vs = levels_[l];
    const std::size_t w = vs.size();
    if (current_.levels[l].size() == w) {
      enter_level(l + 1, partial);
      return;
    }
    for (std::size_t i = 0; i < w; ++i) {
      if (fr.used[i]) continue;
      if (budget_ && states_ >= *budget_) {
        throw BudgetExhausted("exact search exceeded its budget of " + std::to_string(*budget_) +
                                  " states",
                              found_ ? bound_ : bound_ - 1);
      }
      ++states_;
      const long long next = partial + fr.forced[i];
      fr.used[i] = 1;
      long long lb = next;
      for (std::size_t r = 0; r < w; ++r) {
        if (fr.used[r]) continue;
        lb += fr.forced[r] + fr.c[i * w + r];
        for (std::size_t s = r + 1; s < w; ++s) {
          if (!fr.used[s]) lb += std::min(fr.c[r * w + s], fr.c[s * w + r]);
        }
      }
      if (lb < bound_) {
        for (std::size_t r = 0; r < w; ++r) fr.forced[r] += fr.c[i * w + r];
        pos_[vs[i]] = current_.levels[l].size();
        current_.levels[l].push_back(vs[i]);
        place(l, fr, next);
        current_.levels[l].pop_back();
        for (std::size_t r = 0; r < w; ++r) fr.forced[r] -= fr.c[i * w + r];
      }
      fr.used[i] = 0;
    }
  }

  const ReebGraph& g2_;
  std::optional<std::uint64_t> budget_;
  LevelAssignment lv_;
  std::vector<std::vector<VertexIndex>> levels_;
  std::vector<std::vector<VertexIndex>> down_;
  std::vector<std::size_t> pos_;
  LevelOrdering current_;
  LevelOrdering best_order_;
  long long bound_ = std::numeric_limits<long long>::max();
  bool found_ = false;
  std::uint64_t states_ = 0;
};

}  // namespace

ExactResult exact_rgcn(const ReebGraph& g, std::optional<std::uint64_t> budget) {
  return exact_rgcn(std::make_shared<const ReebGraph>(g), budget);
}

ExactResult exact_rgcn(std::shared_ptr<const ReebGraph> g, std::optional<std::uint64_t> budget) {
  ExactResult res;
  res.subdivision = subdivide(g);
  const ReebGraph& g2 = *res.subdivision.subdivided;

  // A heuristic value bounds the search; +1 keeps optimal orderings that tie
  // with it reachable, so the witness stays the lexicographically least one.
  const long long heuristic = count_crossings_layered(g2, barycenter_ordering(g2));
  ExactSearch search(g2, budget);
  search.run(heuristic + 1);
  if (!search.found()) throw Error(ErrorCode::Internal, "exact search found no ordering");
  res.crossings = search.best();
  res.witness = search.witness();
  res.states = search.states();
  return res;
}

}  // namespace reeb

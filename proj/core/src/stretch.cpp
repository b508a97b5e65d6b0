#include "reeb/stretch.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "reeb/crossings.hpp"

namespace reeb {

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
  return sgn(Rational((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)));
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool closed_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

// True if the segments meet anywhere other than a common endpoint.
bool conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto same = [](const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; };
  if (same(a, c)) return on_segment(a, b, d) || on_segment(c, d, b);
  if (same(a, d)) return on_segment(a, b, c) || on_segment(c, d, b);
  if (same(b, c)) return on_segment(a, b, d) || on_segment(c, d, a);
  if (same(b, d)) return on_segment(a, b, c) || on_segment(c, d, a);
  return closed_intersect(a, b, c, d);
}

// Builds the straight-line drawing one vertex at a time, each new vertex to
// the right of everything placed so far. A vertex may be placed once every
// neighbour it connects back to is still exposed to the right on the side
// the new edge leaves from. Dead ends are remembered by placed set plus
// exposure flags, which determine everything that can still happen.
class Planner {
 public:
  explicit Planner(const Drawing& d)
      : g_(d.graph()), n_(g_.vertex_count()), x_(n_), placed_(n_, false) {
    by_position_.resize(n_);
    for (VertexIndex v = 0; v < n_; ++v) by_position_[v] = v;
    std::sort(by_position_.begin(), by_position_.end(), [&](VertexIndex a, VertexIndex b) {
      if (d.x(a) != d.x(b)) return d.x(a) < d.x(b);
      if (g_.height(a) != g_.height(b)) return g_.height(a) < g_.height(b);
      return g_.id(a) < g_.id(b);
    });
    level_prev_.assign(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.height(by_position_[i]) == g_.height(by_position_[j])) {
          level_prev_[by_position_[i]] = by_position_[j];
        }
      }
    }
  }

  bool run() { return extend(); }
  const VertexInsertionOrder& order() const { return order_; }
  const std::vector<Rational>& xs() const { return x_; }

 private:
  Point pos(VertexIndex v) const { return {x_[v], g_.height(v)}; }

  VertexIndex other(EdgeIndex e, VertexIndex v) const {
    return g_.edge(e).u == v ? g_.edge(e).v : g_.edge(e).u;
  }

  // Can a straight edge leave u towards the far right, going up (dir > 0)
  // or down (dir < 0), without meeting a completed edge?
  bool exposed(VertexIndex u, int dir) const {
    const Rational& h = g_.height(u);
    for (EdgeIndex f : completed_) {
      if (g_.edge(f).u == u || g_.edge(f).v == u) continue;
      const VertexIndex lo = g_.lower(f), hi = g_.upper(f);
      const Rational &hl = g_.height(lo), &hh = g_.height(hi);
      if (dir > 0 ? !(hl <= h && h < hh) : !(hl < h && h <= hh)) continue;
      Rational fx;
      if (hl == h) {
        fx = x_[lo];
      } else if (hh == h) {
        fx = x_[hi];
      } else {
        fx = x_[lo] + (x_[hi] - x_[lo]) * (h - hl) / (hh - hl);
      }
      if (fx > x_[u]) return false;
    }
    return true;
  }

  bool can_place(VertexIndex v) const {
    if (level_prev_[v] != n_ && !placed_[level_prev_[v]]) return false;
    for (EdgeIndex e : g_.incident(v)) {
      const VertexIndex u = other(e, v);
      if (placed_[u] && !exposed(u, g_.height(v) > g_.height(u) ? 1 : -1)) return false;
    }
    return true;
  }

  // Places v at the first clean offset in 1, 2, 4, ... beyond the right edge.
  bool place(VertexIndex v, std::vector<EdgeIndex>& fresh) {
    fresh.clear();
    for (EdgeIndex e : g_.incident(v)) {
      if (placed_[other(e, v)]) fresh.push_back(e);
    }
    auto clean = [&]() {
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        const Edge& ei = g_.edge(fresh[i]);
        const Point a = pos(ei.u), b = pos(ei.v);
        for (EdgeIndex f : completed_) {
          if (conflict(a, b, pos(g_.edge(f).u), pos(g_.edge(f).v))) return false;
        }
        for (std::size_t j = i + 1; j < fresh.size(); ++j) {
          if (conflict(a, b, pos(g_.edge(fresh[j]).u), pos(g_.edge(fresh[j]).v))) return false;
        }
        for (VertexIndex w = 0; w < n_; ++w) {
          if (placed_[w] && w != ei.u && w != ei.v && on_segment(a, b, pos(w))) return false;
        }
      }
      return true;
    };
    const Rational right = order_.empty() ? Rational(-1) : x_[order_.back()];
    Rational offset(1);
    x_[v] = right + offset;
    for (int attempt = 0; !clean(); ++attempt) {
      if (attempt == 256) return false;
      offset *= 2;
      x_[v] = right + offset;
    }
    return true;
  }

  std::vector<std::uint8_t> state() const {
    std::vector<std::uint8_t> key(n_, 0);
    for (VertexIndex v = 0; v < n_; ++v) {
      if (placed_[v]) key[v] = static_cast<std::uint8_t>(1 + exposed(v, 1) + 2 * exposed(v, -1));
    }
    return key;
  }

  bool extend() {
    if (order_.size() == n_) return true;
    const auto key = state();
    if (dead_.count(key)) return false;
    std::vector<EdgeIndex> fresh;
    for (VertexIndex v : by_position_) {
      if (placed_[v] || !can_place(v) || !place(v, fresh)) continue;
      placed_[v] = true;
      order_.push_back(v);
      completed_.insert(completed_.end(), fresh.begin(), fresh.end());
      if (extend()) return true;
      completed_.resize(completed_.size() - fresh.size());
      order_.pop_back();
      placed_[v] = false;
    }
    dead_.insert(key);
    return false;
  }

  const ReebGraph& g_;
  std::size_t n_;
  std::vector<Rational> x_;
  std::vector<bool> placed_;
  std::vector<VertexIndex> by_position_;
  std::vector<VertexIndex> level_prev_;
  VertexInsertionOrder order_;
  std::vector<EdgeIndex> completed_;
  std::set<std::vector<std::uint8_t>> dead_;
};

// Point with A x >= b, or nothing if none exists. Exact two-phase-free
// simplex (phase one only) with Bland's rule; variables are unrestricted.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b,
                                                    std::size_t vars) {
  const std::size_t rows = a.size();
  // Columns: x+ [0, vars), x- [vars, 2 vars), surplus, artificial, rhs.
  const std::size_t sur = 2 * vars, art = sur + rows, rhs = art + rows;
  std::vector<std::vector<Rational>> t(rows + 1, std::vector<Rational>(rhs + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const int flip = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < vars; ++j) {
      t[i][j] = flip * a[i][j];
      t[i][vars + j] = -flip * a[i][j];
    }
    t[i][sur + i] = -flip;
    t[i][rhs] = flip * b[i];
    if (flip < 0) {
      basis[i] = sur + i;
    } else {
      t[i][art + i] = 1;
      basis[i] = art + i;
      for (std::size_t j = 0; j < art; ++j) t[rows][j] -= t[i][j];
      t[rows][rhs] -= t[i][rhs];
    }
  }
  while (true) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == rhs) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) return std::nullopt;  // unbounded cannot happen when minimising a sum
    const Rational pivot = t[leave][enter];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= rhs; ++j) {
      if (t[leave][j] != 0) {
        t[leave][j] /= pivot;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j : nz) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (t[rows][rhs] != 0) return std::nullopt;
  std::vector<Rational> x(vars);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) x[basis[i]] += t[i][rhs];
    else if (basis[i] < 2 * vars) x[basis[i] - vars] -= t[i][rhs];
  }
  return x;
}

// Straight-line x values keeping, on every vertex level line, the input
// left-to-right order of vertices and edge passages, each gap at least 1.
// Straight pieces between consecutive lines then cannot cross.
std::optional<std::vector<Rational>> order_preserving_xs(const Drawing& d) {
  const ReebGraph& g = d.graph();
  const std::size_t n = g.vertex_count();
  std::set<Rational> heights;
  for (const VertexSpec& v : g.vertices()) heights.insert(v.height);
  std::vector<std::vector<Point>> polys;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) polys.push_back(d.polyline(e));

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const Rational& h : heights) {
    // (input x, coefficient row) for everything met on this line.
    std::vector<std::pair<Rational, std::vector<Rational>>> items;
    for (VertexIndex v = 0; v < n; ++v) {
      if (g.height(v) != h) continue;
      std::vector<Rational> row(n);
      row[v] = 1;
      items.emplace_back(d.x(v), std::move(row));
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const VertexIndex lo = g.lower(e), hi = g.upper(e);
      if (!(g.height(lo) < h && h < g.height(hi))) continue;
      const Rational s = (h - g.height(lo)) / (g.height(hi) - g.height(lo));
      std::vector<Rational> row(n);
      row[lo] += 1 - s;
      row[hi] += s;
      items.emplace_back(x_at(polys[e], h), std::move(row));
    }
    std::sort(items.begin(), items.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = items[i + 1].second[j] - items[i].second[j];
      a.push_back(std::move(row));
      b.emplace_back(1);
    }
  }
  return feasible_point(a, b, n);
}

void require_simple(const ReebGraph& g) {
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const Edge& e : g.edges()) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      throw Error(ErrorCode::WrongShape, "parallel edges between '" + g.id(e.u) + "' and '" +
                                             g.id(e.v) + "' cannot both be straight");
    }
  }
}

void require_stretchable(const Drawing& d) {
  require_simple(d.graph());
  if (count_crossings_geometric(d).count != 0) {
    throw Error(ErrorCode::HasCrossings, "drawing has crossings");
  }
}

}  // namespace

bool EdgeLeftRightOrder::precedes(EdgeIndex a, EdgeIndex b) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

EdgeLeftRightOrder edge_partial_order(const Drawing& d) {
  if (count_crossings_geometric(d).count != 0) {
    throw Error(ErrorCode::HasCrossings, "drawing has crossings");
  }
  const ReebGraph& g = d.graph();
  const std::size_t m = g.edge_count();
  std::vector<std::vector<Point>> polys(m);
  for (EdgeIndex e = 0; e < m; ++e) polys[e] = d.polyline(e);

  EdgeLeftRightOrder out;
  for (EdgeIndex a = 0; a < m; ++a) {
    for (EdgeIndex b = a + 1; b < m; ++b) {
      const Rational lo = std::max(g.height(g.lower(a)), g.height(g.lower(b)));
      const Rational hi = std::min(g.height(g.upper(a)), g.height(g.upper(b)));
      if (!(lo < hi)) continue;
      const Rational mid = (lo + hi) / 2;
      const Rational xa = x_at(polys[a], mid), xb = x_at(polys[b], mid);
      if (xa == xb) throw Error(ErrorCode::Degenerate, "edges touch without crossing");
      out.pairs.emplace_back(xa < xb ? a : b, xa < xb ? b : a);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

VertexInsertionOrder vertex_insertion_order(const Drawing& d) {
  require_stretchable(d);
  Planner plan(d);
  if (!plan.run()) throw Error(ErrorCode::Internal, "no free vertex during insertion");
  return plan.order();
}

Drawing stretch(const Drawing& d) {
  require_stretchable(d);
  Planner plan(d);
  std::vector<Rational> x;
  if (plan.run()) {
    x = plan.xs();
  } else if (auto lp = order_preserving_xs(d)) {
    x = std::move(*lp);
  } else {
    throw Error(ErrorCode::Internal, "no straight-line drawing keeps the level order");
  }
  Drawing out(d.graph_ptr(), std::move(x));
  if (count_crossings_geometric(out).count != 0 || level_orders(out) != level_orders(d)) {
    throw Error(ErrorCode::Internal, "stretched drawing lost planarity or level order");
  }
  return out;
}

}  // namespace reeb

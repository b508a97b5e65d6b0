#include "reeb/drawing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace reeb {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidDrawing, message);
}

std::string edge_name(const ReebGraph& g, EdgeIndex e) {
  return "edge " + std::to_string(e) + " (" + g.id(g.edge(e).u) + "," + g.id(g.edge(e).v) + ")";
}

}  // namespace

Drawing::Drawing(std::shared_ptr<const ReebGraph> graph, std::vector<Rational> x,
                 std::vector<std::vector<Point>> bends)
    : graph_(std::move(graph)), x_(std::move(x)), bends_(std::move(bends)) {
  check_invariants();
}

Drawing::Drawing(std::shared_ptr<const ReebGraph> graph, std::vector<Rational> x)
    : graph_(std::move(graph)), x_(std::move(x)) {
  if (graph_) bends_.assign(graph_->edge_count(), {});
  check_invariants();
}

std::vector<Point> Drawing::polyline(EdgeIndex e) const {
  std::vector<Point> pts;
  pts.reserve(bends_[e].size() + 2);
  pts.push_back(position(graph_->lower(e)));
  pts.insert(pts.end(), bends_[e].begin(), bends_[e].end());
  pts.push_back(position(graph_->upper(e)));
  return pts;
}

bool Drawing::is_straight() const {
  return std::all_of(bends_.begin(), bends_.end(), [](const auto& b) { return b.empty(); });
}

void Drawing::check_invariants() const {
  if (!graph_) invalid("drawing has no graph");
  const ReebGraph& g = *graph_;
  if (x_.size() != g.vertex_count()) {
    invalid("drawing has " + std::to_string(x_.size()) + " x-coordinates for " +
            std::to_string(g.vertex_count()) + " vertices");
  }
  if (bends_.size() != g.edge_count()) {
    invalid("drawing has " + std::to_string(bends_.size()) + " bend lists for " +
            std::to_string(g.edge_count()) + " edges");
  }

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    Rational prev = g.height(g.lower(e));
    for (const Point& p : bends_[e]) {
      if (!(p.y > prev)) invalid(edge_name(g, e) + " is not strictly y-monotone");
      prev = p.y;
    }
    if (!(g.height(g.upper(e)) > prev)) invalid(edge_name(g, e) + " is not strictly y-monotone");
  }

  // Vertices sorted by (height, x) expose coincidences and allow range queries.
  std::vector<VertexIndex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    if (g.height(a) != g.height(b)) return g.height(a) < g.height(b);
    return x_[a] < x_[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (g.height(order[i]) == g.height(order[i - 1]) && x_[order[i]] == x_[order[i - 1]]) {
      invalid("vertices '" + g.id(order[i - 1]) + "' and '" + g.id(order[i]) + "' coincide");
    }
  }

  auto by_height = [&](VertexIndex v, const Rational& y) { return g.height(v) < y; };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Rational& lo = g.height(g.lower(e));
    const Rational& hi = g.height(g.upper(e));
    auto first = std::upper_bound(order.begin(), order.end(), lo,
                                  [&](const Rational& y, VertexIndex v) { return y < g.height(v); });
    auto last = std::lower_bound(order.begin(), order.end(), hi, by_height);
    if (first >= last) continue;
    const std::vector<Point> pts = polyline(e);
    for (auto it = first; it != last; ++it) {
      if (x_at(pts, g.height(*it)) == x_[*it]) {
        invalid(edge_name(g, e) + " passes through vertex '" + g.id(*it) + "'");
      }
    }
  }
}

Rational x_at(std::span<const Point> polyline, const Rational& y) {
  auto it = std::lower_bound(polyline.begin(), polyline.end(), y,
                             [](const Point& p, const Rational& v) { return p.y < v; });
  if (it == polyline.end()) throw Error(ErrorCode::Internal, "x_at: height above polyline");
  if (it->y == y) return it->x;
  if (it == polyline.begin()) throw Error(ErrorCode::Internal, "x_at: height below polyline");
  const Point& a = *(it - 1);
  const Point& b = *it;
  return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

Drawing mirrored(const Drawing& d) {
  std::vector<Rational> x = d.xs();
  for (Rational& v : x) v = -v;
  std::vector<std::vector<Point>> bends = d.all_bends();
  for (auto& list : bends) {
    for (Point& p : list) p.x = -p.x;
  }
  return Drawing(d.graph_ptr(), std::move(x), std::move(bends));
}

std::vector<std::vector<VertexIndex>> level_orders(const Drawing& d) {
  const ReebGraph& g = d.graph();
  const LevelAssignment lv = levels(g);
  std::vector<std::vector<VertexIndex>> out(lv.heights.size());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out[lv.level[v]].push_back(v);
  for (auto& level : out) {
    std::sort(level.begin(), level.end(),
              [&](VertexIndex a, VertexIndex b) { return d.x(a) < d.x(b); });
  }
  return out;
}

}  // namespace reeb

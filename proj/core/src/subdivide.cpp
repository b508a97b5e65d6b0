#include "reeb/subdivide.hpp"

#include <algorithm>

namespace reeb {

namespace {

// Piecewise-linear bijection between original heights and level ranks.
class HeightMap {
 public:
  explicit HeightMap(std::vector<Rational> heights) : h_(std::move(heights)) {}

  Rational to_rank(const Rational& y) const {
    if (h_.size() < 2) return Rational(0);
    auto it = std::upper_bound(h_.begin(), h_.end(), y);
    std::size_t i = it == h_.begin() ? 0 : static_cast<std::size_t>(it - h_.begin()) - 1;
    i = std::min(i, h_.size() - 2);
    Rational r = Rational(static_cast<long>(i)) + (y - h_[i]) / (h_[i + 1] - h_[i]);
    return r;
  }

  Rational to_height(const Rational& r) const {
    if (h_.size() < 2) return h_.empty() ? Rational(0) : h_[0];
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    long i = std::clamp(fl.get_si(), 0L, static_cast<long>(h_.size()) - 2);
    const auto k = static_cast<std::size_t>(i);
    return h_[k] + (r - Rational(i)) * (h_[k + 1] - h_[k]);
  }

 private:
  std::vector<Rational> h_;
};

void require_same(const ReebGraph& a, const std::shared_ptr<const ReebGraph>& b,
                  const char* what) {
  if (!b || !(a == *b)) {
    throw Error(ErrorCode::MapMismatch, std::string("drawing does not belong to the ") + what +
                                            " graph of this subdivision map");
  }
}

}  // namespace

SubdivisionMap subdivide(const ReebGraph& g) {
  return subdivide(std::make_shared<const ReebGraph>(g));
}

SubdivisionMap subdivide(std::shared_ptr<const ReebGraph> gp) {
  const ReebGraph& g = *gp;
  require_connected(g, "subdivide");
  const LevelAssignment lv = levels(g);

  SubdivisionMap m;
  m.original = gp;
  std::vector<VertexSpec> specs;
  specs.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    specs.push_back({g.id(v), Rational(lv.level[v])});
    m.image.push_back(v);
  }
  m.generated.assign(g.vertex_count(), std::nullopt);

  std::vector<Edge> edges;
  m.paths.resize(g.edge_count());
  m.path_edges.resize(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const VertexIndex lo = g.lower(e);
    const VertexIndex hi = g.upper(e);
    auto& path = m.paths[e];
    path.push_back(lo);
    for (int level = lv.level[lo] + 1; level < lv.level[hi]; ++level) {
      const VertexIndex w = specs.size();
      specs.push_back({std::string(kSubdivisionPrefix) + std::to_string(e) + "_" +
                           std::to_string(level),
                       Rational(level)});
      m.generated.push_back(SubdivisionMap::Generated{e, path.size()});
      path.push_back(w);
    }
    path.push_back(hi);
    if (path.size() == 2) {
      // Keep the original endpoint order for edges that need no subdivision.
      m.path_edges[e].push_back(edges.size());
      edges.push_back(g.edge(e));
      continue;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      m.path_edges[e].push_back(edges.size());
      edges.push_back(Edge{path[i], path[i + 1]});
    }
  }
  m.subdivided = std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
  return m;
}

Drawing unsubdivide_drawing(const Drawing& d2, const SubdivisionMap& m) {
  require_same(d2.graph(), m.subdivided, "subdivided");
  const ReebGraph& g = *m.original;
  const HeightMap hm(levels(g).heights);

  std::vector<Rational> x(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) x[v] = d2.x(m.image[v]);

  std::vector<std::vector<Point>> bends(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& pe = m.path_edges[e];
    for (std::size_t i = 0; i < pe.size(); ++i) {
      for (const Point& p : d2.bends(pe[i])) bends[e].push_back({p.x, hm.to_height(p.y)});
      if (i + 1 < pe.size()) {
        const VertexIndex w = m.paths[e][i + 1];
        bends[e].push_back({d2.x(w), hm.to_height(d2.graph().height(w))});
      }
    }
  }
  return Drawing(m.original, std::move(x), std::move(bends));
}

Drawing subdivide_drawing(const Drawing& d, const SubdivisionMap& m) {
  require_same(d.graph(), m.original, "original");
  const ReebGraph& g = *m.original;
  const ReebGraph& g2 = *m.subdivided;
  const std::vector<Rational> heights = levels(g).heights;
  const HeightMap hm(heights);

  std::vector<Rational> x(g2.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) x[m.image[v]] = d.x(v);
  std::vector<std::vector<Point>> bends(g2.edge_count());

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    // Break every segment at the level heights it crosses before rescaling,
    // so each piece stays inside one strip and maps to a straight piece.
    const std::vector<Point> raw = d.polyline(e);
    std::vector<Point> pts{raw.front()};
    for (std::size_t i = 1; i < raw.size(); ++i) {
      const Point& a = raw[i - 1];
      const Point& b = raw[i];
      for (const Rational& h : heights) {
        if (h > a.y && h < b.y) pts.push_back({a.x + (b.x - a.x) * (h - a.y) / (b.y - a.y), h});
      }
      pts.push_back(b);
    }
    for (Point& p : pts) p.y = hm.to_rank(p.y);
    const auto& path = m.paths[e];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      x[path[i]] = x_at(pts, g2.height(path[i]));
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const Rational& lo = g2.height(path[i]);
      const Rational& hi = g2.height(path[i + 1]);
      auto& out = bends[m.path_edges[e][i]];
      for (const Point& p : pts) {
        if (p.y > lo && p.y < hi) out.push_back(p);
      }
    }
  }

  try {
    return Drawing(m.subdivided, std::move(x), std::move(bends));
  } catch (const Error& err) {
    throw Error(ErrorCode::Degenerate, std::string("cutting at levels is degenerate: ") + err.what());
  }
}

}  // namespace reeb

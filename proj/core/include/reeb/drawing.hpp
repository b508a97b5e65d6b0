#pragma once

#include <memory>
#include <span>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A drawing of a Reeb graph: each vertex sits at (x(v), h(v)) and each edge
/// is a y-monotone polyline from its lower to its upper endpoint, with bend
/// points strictly between the endpoint heights.
///
/// The constructor enforces the invariants (strictly increasing bend heights,
/// distinct vertex positions, no polyline through a foreign vertex) and throws
/// ErrorCode::InvalidDrawing when one is broken.
class Drawing {
 public:
  Drawing(std::shared_ptr<const ReebGraph> graph, std::vector<Rational> x,
          std::vector<std::vector<Point>> bends);
  /// Straight-line drawing.
  Drawing(std::shared_ptr<const ReebGraph> graph, std::vector<Rational> x);

  const ReebGraph& graph() const { return *graph_; }
  const std::shared_ptr<const ReebGraph>& graph_ptr() const { return graph_; }

  const Rational& x(VertexIndex v) const { return x_[v]; }
  const std::vector<Rational>& xs() const { return x_; }
  Point position(VertexIndex v) const { return {x_[v], graph_->height(v)}; }

  /// Bends of edge e ordered by increasing y.
  std::span<const Point> bends(EdgeIndex e) const { return bends_[e]; }
  const std::vector<std::vector<Point>>& all_bends() const { return bends_; }

  /// Lower endpoint, bends, upper endpoint.
  std::vector<Point> polyline(EdgeIndex e) const;

  bool is_straight() const;

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return *a.graph_ == *b.graph_ && a.x_ == b.x_ && a.bends_ == b.bends_;
  }

 private:
  void check_invariants() const;

  std::shared_ptr<const ReebGraph> graph_;
  std::vector<Rational> x_;
  std::vector<std::vector<Point>> bends_;
};

/// x-coordinate of a y-monotone polyline (points ordered by increasing y) at
/// height y, which must lie within its span.
Rational x_at(std::span<const Point> polyline, const Rational& y);

/// Returns a copy with every x negated (the mirror image).
Drawing mirrored(const Drawing& d);

/// Per-level left-to-right vertex order of a drawing, keyed by distinct height.
std::vector<std::vector<VertexIndex>> level_orders(const Drawing& d);

}  // namespace reeb

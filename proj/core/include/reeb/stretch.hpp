#pragma once

#include <utility>
#include <vector>

#include "reeb/drawing.hpp"

namespace reeb {

/// Left-to-right relation between edges of a crossing-free drawing. A pair
/// (a, b) means the open height ranges of a and b overlap and a lies strictly
/// left of b there. Pairs are sorted.
struct EdgeLeftRightOrder {
  std::vector<std::pair<EdgeIndex, EdgeIndex>> pairs;

  bool precedes(EdgeIndex a, EdgeIndex b) const;
};

using VertexInsertionOrder = std::vector<VertexIndex>;

/// Throws HasCrossings if d has a crossing, Degenerate on touching edges.
EdgeLeftRightOrder edge_partial_order(const Drawing& d);

/// Order in which stretch places the vertices, left to right. Candidates are
/// tried by input position (x, then height, then id); a vertex is free when
/// its level predecessor is placed and each placed neighbour can still reach
/// the far right on the side of the connecting edge. Dead ends backtrack.
/// Throws HasCrossings or WrongShape as stretch does, Internal if no order
/// exists.
VertexInsertionOrder vertex_insertion_order(const Drawing& d);

/// Straight-line redrawing of a crossing-free drawing that keeps every
/// vertex height and the left-to-right vertex order on each level. Vertices
/// are placed in insertion order, each far enough right that its edges meet
/// nothing. Some drawings admit no such order; those are solved exactly as a
/// linear feasibility problem that keeps the left-to-right order of vertices
/// and edges on every level line. Throws HasCrossings on crossing input and
/// WrongShape on parallel edges, which cannot both be straight.
Drawing stretch(const Drawing& d);

}  // namespace reeb

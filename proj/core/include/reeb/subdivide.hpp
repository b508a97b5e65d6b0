#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "reeb/drawing.hpp"
#include "reeb/graph.hpp"

namespace reeb {

inline constexpr std::string_view kSubdivisionPrefix = "__sub_";

/// Links every edge of an original graph to its replacement path in the
/// subdivided graph.
struct SubdivisionMap {
  struct Generated {
    EdgeIndex owner;       // original edge
    std::size_t position;  // index within the owner's path (1 .. len-2)
  };

  std::shared_ptr<const ReebGraph> original;
  std::shared_ptr<const ReebGraph> subdivided;
  /// Original vertex -> vertex of the subdivided graph.
  std::vector<VertexIndex> image;
  /// Per original edge: path vertices in the subdivided graph, from the lower
  /// endpoint to the upper one.
  std::vector<std::vector<VertexIndex>> paths;
  /// Per original edge: the subdivided edges along the path, bottom to top.
  std::vector<std::vector<EdgeIndex>> path_edges;
  /// Per subdivided vertex: owner information for generated vertices.
  std::vector<std::optional<Generated>> generated;
};

/// Replaces every edge by a path through each level it skips. Every vertex of
/// the result has its level rank as height. Throws on disconnected input.
SubdivisionMap subdivide(std::shared_ptr<const ReebGraph> g);
SubdivisionMap subdivide(const ReebGraph& g);

/// Turns a drawing of the subdivided graph back into a drawing of the
/// original: generated vertices become bends and heights are rescaled strip
/// by strip. Crossing counts are preserved.
Drawing unsubdivide_drawing(const Drawing& d2, const SubdivisionMap& m);

/// Cuts every polyline of a drawing of the original graph at each level it
/// crosses; the cut points become the generated vertices.
Drawing subdivide_drawing(const Drawing& d, const SubdivisionMap& m);

}  // namespace reeb

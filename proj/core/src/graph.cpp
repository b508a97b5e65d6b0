#include "reeb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reeb {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadNumber: return "bad_number";
    case ErrorCode::MalformedJson: return "malformed_json";
    case ErrorCode::DuplicateVertex: return "duplicate_vertex";
    case ErrorCode::UnknownVertex: return "unknown_vertex";
    case ErrorCode::SelfLoop: return "self_loop";
    case ErrorCode::HorizontalEdge: return "horizontal_edge";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::WrongShape: return "wrong_shape";
    case ErrorCode::InvalidDrawing: return "invalid_drawing";
    case ErrorCode::Degenerate: return "degenerate_geometry";
    case ErrorCode::HasCrossings: return "has_crossings";
    case ErrorCode::MapMismatch: return "map_mismatch";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::BudgetExhausted: return "budget_exhausted";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

ReebGraph::ReebGraph(std::vector<VertexSpec> vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
  by_id_.reserve(vertices_.size());
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    if (!by_id_.emplace(vertices_[i].id, i).second) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex id '" + vertices_[i].id + "'");
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    edges_.push_back(Edge{index_of(a), index_of(b)});
  }
  build_index();
}

ReebGraph::ReebGraph(std::vector<VertexSpec> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  by_id_.reserve(vertices_.size());
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    if (!by_id_.emplace(vertices_[i].id, i).second) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex id '" + vertices_[i].id + "'");
    }
  }
  for (const Edge& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size()) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint index out of range");
    }
  }
  build_index();
}

void ReebGraph::build_index() {
  incident_.assign(vertices_.size(), {});
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    const std::string name = "(" + id(ed.u) + "," + id(ed.v) + ")";
    if (ed.u == ed.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at edge " + std::to_string(e) + " " + name);
    }
    if (height(ed.u) == height(ed.v)) {
      throw Error(ErrorCode::HorizontalEdge,
                  "edge " + std::to_string(e) + " " + name + " joins two vertices of equal height");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

std::optional<VertexIndex> ReebGraph::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

VertexIndex ReebGraph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex id '" + std::string(id) + "'");
}

DegreeProfile degree_profile(const ReebGraph& g) {
  DegreeProfile p;
  p.total.assign(g.vertex_count(), 0);
  p.down.assign(g.vertex_count(), 0);
  p.up.assign(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++p.total[e.u];
    ++p.total[e.v];
    if (g.height(e.u) < g.height(e.v)) {
      ++p.up[e.u];
      ++p.down[e.v];
    } else {
      ++p.down[e.u];
      ++p.up[e.v];
    }
  }
  return p;
}

LevelAssignment levels(const ReebGraph& g) {
  LevelAssignment out;
  out.heights.reserve(g.vertex_count());
  for (const VertexSpec& v : g.vertices()) out.heights.push_back(v.height);
  std::sort(out.heights.begin(), out.heights.end());
  out.heights.erase(std::unique(out.heights.begin(), out.heights.end()), out.heights.end());
  out.level.reserve(g.vertex_count());
  for (const VertexSpec& v : g.vertices()) {
    auto it = std::lower_bound(out.heights.begin(), out.heights.end(), v.height);
    out.level.push_back(static_cast<int>(it - out.heights.begin()));
  }
  return out;
}

bool is_connected(const ReebGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident(v)) {
      VertexIndex w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

void require_connected(const ReebGraph& g, std::string_view operation) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, std::string(operation) + " requires a connected graph");
  }
}

ValidationReport validate(const ReebGraph& g) {
  ValidationReport report;
  const DegreeProfile deg = degree_profile(g);
  const LevelAssignment lv = levels(g);

  report.is_connected = is_connected(g);
  if (!report.is_connected) {
    report.violations.push_back({"connected", std::nullopt, std::nullopt, "graph is not connected"});
  }

  bool generic = true;
  bool subdivided = true;

  // Unique heights.
  std::vector<VertexIndex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexIndex a, VertexIndex b) { return g.height(a) < g.height(b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (g.height(order[i]) == g.height(order[i - 1])) {
      generic = false;
      report.violations.push_back({"generic.unique_height", order[i], std::nullopt,
                                   "vertex '" + g.id(order[i]) + "' shares height " +
                                       to_string(g.height(order[i])) + " with '" +
                                       g.id(order[i - 1]) + "'"});
    }
  }

  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::string name = "vertex '" + g.id(v) + "'";
    if (deg.total[v] != 1 && deg.total[v] != 3) {
      generic = false;
      report.violations.push_back({"generic.degree", v, std::nullopt,
                                   name + " has degree " + std::to_string(deg.total[v]) +
                                       " (generic requires 1 or 3)"});
    }
    if (deg.total[v] > 3) {
      subdivided = false;
      report.violations.push_back({"subdivided.degree", v, std::nullopt,
                                   name + " has degree " + std::to_string(deg.total[v]) +
                                       " (subdivided requires at most 3)"});
    }
    if (deg.down[v] > 2) {
      generic = false;
      subdivided = false;
      report.violations.push_back({"down_degree", v, std::nullopt,
                                   name + " has downward degree " + std::to_string(deg.down[v])});
    }
    if (deg.up[v] > 2) {
      generic = false;
      subdivided = false;
      report.violations.push_back({"up_degree", v, std::nullopt,
                                   name + " has upward degree " + std::to_string(deg.up[v])});
    }
  }

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (std::abs(lv.level[ed.u] - lv.level[ed.v]) != 1) {
      subdivided = false;
      report.violations.push_back({"subdivided.consecutive_levels", std::nullopt, e,
                                   "edge " + std::to_string(e) + " (" + g.id(ed.u) + "," +
                                       g.id(ed.v) + ") spans levels " +
                                       std::to_string(lv.level[ed.u]) + " and " +
                                       std::to_string(lv.level[ed.v])});
    }
  }

  report.is_generic = generic;
  report.is_subdivided = subdivided;
  return report;
}

const char* to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::Path: return "path";
    case ShapeClass::Caterpillar: return "caterpillar";
    case ShapeClass::SingleCycle: return "single_cycle";
    case ShapeClass::Tree: return "tree";
    case ShapeClass::General: return "general";
  }
  return "unknown";
}

ShapeClass classify_shape(const ReebGraph& g) {
  require_connected(g, "classify_shape");
  const std::size_t n = g.vertex_count();
  const DegreeProfile deg = degree_profile(g);
  const bool acyclic = n == 0 || g.edge_count() + 1 == n;

  if (acyclic) {
    if (std::all_of(deg.total.begin(), deg.total.end(), [](int d) { return d <= 2; })) {
      return ShapeClass::Path;
    }
    // Non-leaf vertices of a tree induce a subtree; it is a path iff every
    // non-leaf has at most two non-leaf neighbours.
    bool spine_is_path = true;
    for (VertexIndex v = 0; v < n && spine_is_path; ++v) {
      if (deg.total[v] <= 1) continue;
      int inner = 0;
      for (EdgeIndex e : g.incident(v)) {
        if (deg.total[g.other(e, v)] > 1) ++inner;
      }
      if (inner > 2) spine_is_path = false;
    }
    if (spine_is_path) return ShapeClass::Caterpillar;
  }

  if (n > 0 && g.edge_count() == n &&
      std::all_of(deg.total.begin(), deg.total.end(), [](int d) { return d == 2; })) {
    return ShapeClass::SingleCycle;
  }
  return acyclic ? ShapeClass::Tree : ShapeClass::General;
}

}  // namespace reeb

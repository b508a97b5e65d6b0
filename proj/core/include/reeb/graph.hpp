#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reeb/error.hpp"
#include "reeb/rational.hpp"

namespace reeb {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Undirected edge between two vertex indices, stored in the order given.
struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;

  bool touches(VertexIndex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct VertexSpec {
  std::string id;
  Rational height;
};

/// A combinatorial Reeb graph: vertices carrying exact heights and a multiset
/// of undirected edges. Parallel edges are allowed. Construction rejects
/// unknown endpoints, self-loops, duplicate ids and edges joining two vertices
/// of equal height; connectivity is left to validate().
///
/// Immutable after construction.
class ReebGraph {
 public:
  ReebGraph() = default;
  ReebGraph(std::vector<VertexSpec> vertices,
            const std::vector<std::pair<std::string, std::string>>& edges);
  ReebGraph(std::vector<VertexSpec> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& id(VertexIndex v) const { return vertices_[v].id; }
  const Rational& height(VertexIndex v) const { return vertices_[v].height; }
  const std::vector<VertexSpec>& vertices() const { return vertices_; }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Edge indices incident to v, with multiplicity, in edge order.
  std::span<const EdgeIndex> incident(VertexIndex v) const { return incident_[v]; }

  VertexIndex other(EdgeIndex e, VertexIndex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  VertexIndex lower(EdgeIndex e) const {
    const Edge& ed = edges_[e];
    return height(ed.u) < height(ed.v) ? ed.u : ed.v;
  }
  VertexIndex upper(EdgeIndex e) const { return other(e, lower(e)); }

  std::optional<VertexIndex> find(std::string_view id) const;
  /// Throws ErrorCode::UnknownVertex naming the id.
  VertexIndex index_of(std::string_view id) const;

  friend bool operator==(const ReebGraph& a, const ReebGraph& b) {
    return a.vertices_.size() == b.vertices_.size() && a.edges_ == b.edges_ &&
           [&] {
             for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
               if (a.vertices_[i].id != b.vertices_[i].id ||
                   a.vertices_[i].height != b.vertices_[i].height) {
                 return false;
               }
             }
             return true;
           }();
  }

 private:
  void build_index();

  std::vector<VertexSpec> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::unordered_map<std::string, VertexIndex> by_id_;
};

struct DegreeProfile {
  std::vector<int> total;
  std::vector<int> down;
  std::vector<int> up;
};

DegreeProfile degree_profile(const ReebGraph& g);

/// Dense ranks of the distinct heights, starting at 0.
struct LevelAssignment {
  std::vector<int> level;          // per vertex
  std::vector<Rational> heights;   // distinct heights, ascending; index = level
  int count() const { return static_cast<int>(heights.size()); }
};

LevelAssignment levels(const ReebGraph& g);

struct Violation {
  std::string rule;
  std::optional<VertexIndex> vertex;
  std::optional<EdgeIndex> edge;
  std::string message;
};

struct ValidationReport {
  bool is_generic = false;
  bool is_subdivided = false;
  bool is_connected = false;
  std::vector<Violation> violations;
};

/// Classifies the graph and lists every violated rule. Never throws.
ValidationReport validate(const ReebGraph& g);

bool is_connected(const ReebGraph& g);

enum class ShapeClass { Path, Caterpillar, SingleCycle, Tree, General };

const char* to_string(ShapeClass shape);

/// First matching class in the order Path, Caterpillar, SingleCycle, Tree,
/// General. Throws ErrorCode::Disconnected on disconnected input.
ShapeClass classify_shape(const ReebGraph& g);

/// Throws ErrorCode::Disconnected unless g is connected.
void require_connected(const ReebGraph& g, std::string_view operation);

}  // namespace reeb

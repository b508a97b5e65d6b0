#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reeb/drawing.hpp"

namespace reeb {

/// Triangular stack of hexagons, row i (counted from the apex) holding i
/// hexagons. The canonical drawing puts the wide row at the bottom.
struct TriHexGrid {
  int rows = 0;
  std::shared_ptr<const ReebGraph> graph;
  Drawing drawing;
  /// Top vertex of the apex hexagon.
  VertexIndex connector = 0;
  /// Lower boundary of the bottom row, left to right (alternating side and
  /// tip vertices, 2k + 1 of them).
  std::vector<VertexIndex> bottom_row;
};

/// Throws InvalidArgument when k < 1.
TriHexGrid tri_hex_grid(int k);

/// Plain undirected graph for linear-arrangement instances. Self-loops are
/// rejected; parallel edges are kept.
struct OlaGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

OlaGraph make_ola_graph(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges);

/// {"vertices":["a","b"],"edges":[["a","b"]]}
OlaGraph parse_ola_graph(std::string_view json_text);
std::string serialize_ola_graph(const OlaGraph& g);

bool is_connected(const OlaGraph& g);

/// position[v] in 1..n.
struct LinearArrangement {
  std::vector<std::size_t> position;

  friend bool operator==(const LinearArrangement&, const LinearArrangement&) = default;
};

/// Sum of |f(v) - f(w)| over edges. Throws InvalidArgument unless f is a
/// bijection onto 1..n.
long long ola_cost(const OlaGraph& g, const LinearArrangement& f);

struct OlaSolution {
  LinearArrangement arrangement;
  long long cost = 0;
};

inline constexpr unsigned long long kDefaultOlaBudget = 40'320ULL * 9 * 10;  // 10!

/// Minimum over all n! bijections, ties broken by the lexicographically
/// smallest position vector. Throws BudgetExhausted when n! > budget.
OlaSolution ola_brute(const OlaGraph& g, unsigned long long budget = kDefaultOlaBudget);

/// One vertex of the source graph owns a grid in the top row and one in the
/// bottom row. Each grid has a chain of connector copies rising from (top
/// row) or hanging below (bottom row) its connector.
struct GadgetGrid {
  std::vector<VertexIndex> vertices;     // local grid order of tri_hex_grid
  VertexIndex connector = 0;
  std::vector<VertexIndex> attach;       // lower boundary, left to right
  std::vector<VertexIndex> chain;        // connector copies, outward from the grid
};

struct GadgetLink {
  std::size_t source_edge = 0;
  std::size_t top_vertex = 0;     // source vertex with the larger index
  std::size_t bottom_vertex = 0;
  std::size_t top_slot = 0;       // position in the top chain
  std::size_t bottom_slot = 0;
  EdgeIndex edge = 0;
};

struct GadgetInstance {
  std::shared_ptr<const ReebGraph> h;
  std::vector<std::string> vertex_parts;  // "V1" or "V2"
  std::vector<std::string> edge_parts;    // "E1" .. "E4"
  long long k_prime = 0;
  OlaGraph source;
  long long k = 0;

  std::vector<GadgetGrid> top;
  std::vector<GadgetGrid> bottom;
  std::vector<GadgetLink> links;
  /// Strand edges of each source vertex, left to right.
  std::vector<std::vector<EdgeIndex>> bundles;
};

/// k' = |E|^2 (k - |E|) + (|E|^2 - 1).
long long gadget_budget(std::size_t edge_count, long long k);

/// Throws Disconnected on a disconnected source and InvalidArgument when it
/// has no edge.
GadgetInstance ola_reduce(const OlaGraph& g, long long k);

/// Places the grids of the top row in the order f_top and those of the
/// bottom row in the order f_bottom. Throws InvalidArgument when either is
/// not a bijection over the source vertices.
Drawing arrangement_to_drawing(const GadgetInstance& inst, const LinearArrangement& f_top,
                               const LinearArrangement& f_bottom);

inline Drawing arrangement_to_drawing(const GadgetInstance& inst, const LinearArrangement& f) {
  return arrangement_to_drawing(inst, f, f);
}

/// Left-to-right order of the top-row and bottom-row connectors. Throws
/// InvalidArgument on a drawing of another graph or on tied connector x.
std::pair<LinearArrangement, LinearArrangement> extract_arrangement(const Drawing& d,
                                                                     const GadgetInstance& inst);

/// Crossings of a gadget drawing split by the parts of the two edges.
struct GadgetCrossings {
  std::size_t total = 0;
  std::size_t link_bundle = 0;  // E1 with E2
  std::size_t link_link = 0;    // E1 with E1
  std::size_t other = 0;
};

GadgetCrossings classify_crossings(const Drawing& d, const GadgetInstance& inst);

/// End-to-end check of the constructive direction: optimal arrangement,
/// reduction at that cost, drawing, crossing count against k'.
struct ReductionCheck {
  OlaSolution optimum;
  long long k_prime = 0;
  std::size_t h_vertices = 0;
  std::size_t h_edges = 0;
  GadgetCrossings crossings;
  bool within_budget = false;
};

ReductionCheck verify_reduction(const OlaGraph& g, unsigned long long budget = kDefaultOlaBudget);

}  // namespace reeb

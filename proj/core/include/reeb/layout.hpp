#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "reeb/crossings.hpp"
#include "reeb/drawing.hpp"

namespace reeb {

/// Path layout: walks from the endpoint with the least id and puts the i-th
/// vertex at x = i. Straight edges, no crossings. Throws WrongShape otherwise.
Drawing layout_path(std::shared_ptr<const ReebGraph> g);

/// Caterpillar layout: the spine goes through layout_path, legs are straight
/// segments from their spine vertex, shifted by at most 1/4 so that two legs
/// of one vertex never overlap. Throws WrongShape on non-caterpillars and on
/// spine vertices of degree above 3.
Drawing layout_caterpillar(std::shared_ptr<const ReebGraph> g);

struct CycleDecomposition {
  Rational top;     // highest height on the cycle
  Rational bottom;  // lowest height on the cycle
  /// The whole cycle in traversal order, starting at t_1.
  std::vector<VertexIndex> cycle;
  /// t_1, b_1, t_2, b_2, ..., t_k, b_k.
  std::vector<VertexIndex> keys;
  std::size_t k = 0;
  /// paths[i]: vertices strictly between keys[i] and keys[(i+1) % 2k].
  std::vector<std::vector<VertexIndex>> paths;
};

/// Top-down iteration number of a single cycle. The traversal starts at the
/// top vertex with the least id and heads to its neighbour with the least id;
/// t_1 is the first top vertex, from there on, that opens a block of top
/// visits.
CycleDecomposition top_down_iteration_number(const ReebGraph& g);

/// Bowtie drawing of an alternating cycle (every vertex on the top or bottom
/// level, edges always joining the two). Emits N/2 - 1 crossings.
Drawing layout_bowtie(std::shared_ptr<const ReebGraph> g);

/// Crossing-free drawing of a cycle with a unique lowest and a unique highest
/// vertex. Throws WrongShape when either extremum is shared.
Drawing layout_cycle_unique_extrema(std::shared_ptr<const ReebGraph> g);

/// Two disjoint paths between the top height t and the bottom height b:
/// r runs from t1 down to b2, g from b1 up to t2. Interior vertices lie
/// strictly between b and t.
struct Type2Subproblem {
  std::shared_ptr<const ReebGraph> graph;
  std::vector<VertexIndex> r;  // t1 ... b2
  std::vector<VertexIndex> g;  // b1 ... t2
};

/// Draws the subgraph formed by r and g with exactly one crossing, keeping
/// t1 left of t2 and b1 left of b2. The crossing lies between the last edge of
/// r and the first edge of g. Throws WrongShape on an invalid subproblem.
Drawing solve_type2(const Type2Subproblem& p);

/// Single-cycle layout with top_down_iteration_number(g).k - 1 crossings.
Drawing layout_cycle(std::shared_ptr<const ReebGraph> g);

/// Exact layout from the branch-and-bound witness (throws BudgetExhausted).
Drawing layout_exact(std::shared_ptr<const ReebGraph> g,
                     std::optional<std::uint64_t> budget = std::nullopt);

/// Barycenter-sweep layout on the subdivided graph.
Drawing layout_heuristic(std::shared_ptr<const ReebGraph> g);

inline constexpr std::uint64_t kDefaultAutoBudget = 2'000'000;

/// Dispatches on classify_shape. Trees and general graphs use the exact
/// search within `budget` states and fall back to the heuristic.
Drawing layout_auto(std::shared_ptr<const ReebGraph> g,
                    std::uint64_t budget = kDefaultAutoBudget);

}  // namespace reeb

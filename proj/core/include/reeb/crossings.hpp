#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "reeb/drawing.hpp"
#include "reeb/subdivide.hpp"

namespace reeb {

struct Crossing {
  EdgeIndex first;
  EdgeIndex second;
  Point at;
};

struct CrossingCertificate {
  std::size_t count = 0;
  std::vector<Crossing> crossings;
};

/// Exact count of transversal intersection points between distinct edge
/// polylines. Shared endpoints do not count; a pair meeting twice counts
/// twice. Overlapping pieces and tangential touches raise
/// ErrorCode::Degenerate.
CrossingCertificate count_crossings_geometric(const Drawing& d);

/// Left-to-right vertex sequence for each level of a graph whose edges all
/// join consecutive levels.
struct LevelOrdering {
  std::vector<std::vector<VertexIndex>> levels;

  friend bool operator==(const LevelOrdering&, const LevelOrdering&) = default;
};

/// Throws ErrorCode::InvalidArgument unless every edge joins consecutive
/// levels and the ordering lists each vertex exactly once on its own level.
void check_layered(const ReebGraph& g2, const LevelOrdering& ord);

/// Sum over strips of inverted edge pairs that share no endpoint.
long long count_crossings_layered(const ReebGraph& g2, const LevelOrdering& ord);

/// Straight-line realization: a vertex goes to its position in the ordering
/// plus a small deterministic per-level offset. Parallel copies of an edge get
/// one mid-strip bend so they do not overlap. The geometric crossing count of
/// the result equals count_crossings_layered(g2, ord).
Drawing realize_layered(std::shared_ptr<const ReebGraph> g2, const LevelOrdering& ord);

struct ExactResult {
  long long crossings = 0;
  LevelOrdering witness;        // ordering of the subdivided graph
  SubdivisionMap subdivision;   // g -> subdivided graph
  std::uint64_t states = 0;     // search nodes visited
};

/// Reeb graph crossing number by branch and bound over per-level
/// permutations of the subdivided graph. Levels are fixed bottom-up, each one
/// vertex at a time in lexicographic order, so the witness is the
/// lexicographically least optimal ordering. Throws BudgetExhausted when more
/// than `budget` search states would be needed.
ExactResult exact_rgcn(std::shared_ptr<const ReebGraph> g,
                       std::optional<std::uint64_t> budget = std::nullopt);
ExactResult exact_rgcn(const ReebGraph& g, std::optional<std::uint64_t> budget = std::nullopt);

/// Barycenter sweeps on the subdivided graph (10 rounds, ties by id).
LevelOrdering barycenter_ordering(const ReebGraph& g2);

/// Initial ordering: each level sorted by vertex id.
LevelOrdering ordering_by_id(const ReebGraph& g2);

}  // namespace reeb

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "reeb/gadget.hpp"
#include "reeb/io.hpp"
#include "reeb/layout.hpp"
#include "reeb/stretch.hpp"
#include "support.hpp"

using namespace reeb;
using namespace reeb::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Replaces the heights by random rationals in the same order.
GraphPtr rationalize(std::mt19937& rng, const ReebGraph& g) {
  std::map<Rational, Rational> value;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) value[g.height(v)];
  Rational at = Rational(uniform(rng, -20, 20)) / uniform(rng, 1, 7);
  for (auto& [h, r] : value) {
    r = at;
    at += Rational(uniform(rng, 1, 9)) / uniform(rng, 1, 7);
  }
  std::vector<VertexSpec> specs;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) specs.push_back({g.id(v), value.at(g.height(v))});
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
}

bool simple(const ReebGraph& g) {
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const Edge& e : g.edges()) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

Outcome planar_paths_and_caterpillars() {
  std::mt19937 rng(101);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const Drawing d = layout_path(rationalize(rng, *random_path(rng, 2 + i % 19, 8)));
    bad += count_crossings_geometric(d).count != 0;
  }
  for (int i = 0; i < 200; ++i) {
    // Spine of s vertices carries at most s + 2 legs, so s <= 9 keeps |V| <= 20.
    const Drawing d = layout_caterpillar(rationalize(rng, *random_caterpillar(rng, 1 + i % 9, 8)));
    bad += count_crossings_geometric(d).count != 0;
  }
  return {bad == 0, "400 drawings, " + std::to_string(bad) + " with crossings"};
}

Outcome bowtie_optimal() {
  Outcome out;
  for (int n : {4, 6, 8, 10}) {
    const GraphPtr g = alternating_cycle(n);
    const auto bowtie = static_cast<long long>(count_crossings_geometric(layout_bowtie(g)).count);
    const long long exact = exact_rgcn(g).crossings;
    out.detail += "N=" + std::to_string(n) + ":" + std::to_string(bowtie) + "/" + std::to_string(exact) + " ";
    out.pass = out.pass && bowtie == n / 2 - 1 && exact == bowtie;
  }
  out.detail += "(bowtie/exact)";
  return out;
}

Outcome cycle_theorem() {
  std::mt19937 rng(303);
  int checked = 0, bad = 0, strict = 0, exact_checked = 0;
  std::string strict_cases;
  while (checked < 100) {
    const GraphPtr g = random_cycle(rng, 3 + static_cast<int>(uniform(rng, 0, 7)), 5);
    if (subdivide(*g).subdivided->vertex_count() > 14) continue;
    ++checked;
    const long long k = static_cast<long long>(top_down_iteration_number(*g).k);
    const auto drawn = static_cast<long long>(count_crossings_geometric(layout_cycle(g)).count);
    bad += drawn != k - 1;
    try {
      const long long best = exact_rgcn(g, 5'000'000).crossings;
      ++exact_checked;
      bad += best > k - 1;
      if (best < k - 1) {
        ++strict;
        if (strict <= 3) {
          strict_cases += " [";
          for (VertexIndex v = 0; v < g->vertex_count(); ++v) {
            strict_cases += (v ? "," : "") + to_string(g->height(v));
          }
          strict_cases += " k=" + std::to_string(k) + " exact=" + std::to_string(best) + "]";
        }
      }
    } catch (const BudgetExhausted&) {
    }
  }
  return {bad == 0, "100 cycles, " + std::to_string(exact_checked) + " solved exactly, " +
                        std::to_string(strict) + " strictly below k-1" + strict_cases};
}

Outcome subdivision_invariance() {
  std::mt19937 rng(404);
  int checked = 0, bad = 0;
  while (checked < 100) {
    const GraphPtr g = random_connected(rng, 2 + static_cast<int>(uniform(rng, 0, 7)), 4,
                                        static_cast<int>(uniform(rng, 0, 3)));
    if (search_space(*g) > 5e4) continue;
    ++checked;
    bad += exact_rgcn(g).crossings != exact_rgcn(subdivide(g).subdivided).crossings;
  }
  return {bad == 0, "100 graphs, " + std::to_string(bad) + " mismatches"};
}

Outcome stretching() {
  std::mt19937 rng(505);
  int checked = 0, bad = 0;
  for (int iter = 0; checked < 100 && iter < 5000; ++iter) {
    const GraphPtr g = random_connected(rng, 3 + iter % 9, 5, iter % 4);
    if (!simple(*g) || search_space(*g) > 2e5) continue;
    const ExactResult r = exact_rgcn(g);
    if (r.crossings != 0) continue;
    ++checked;
    const Drawing curved = random_curved_drawing(rng, r.subdivision, r.witness);
    const Drawing out = stretch(curved);
    bad += !out.is_straight() || count_crossings_geometric(out).count != 0 ||
           level_orders(out) != level_orders(curved);
  }
  return {checked == 100 && bad == 0,
          std::to_string(checked) + " curved drawings, " + std::to_string(bad) + " failures"};
}

Outcome grid_counts() {
  int bad = 0;
  for (int k = 1; k <= 12; ++k) {
    const TriHexGrid t = tri_hex_grid(k);
    bad += t.graph->vertex_count() != static_cast<std::size_t>(k * k + 4 * k + 1) ||
           2 * t.graph->edge_count() != static_cast<std::size_t>(3 * (k * k + 3 * k)) ||
           count_crossings_geometric(t.drawing).count != 0;
  }
  return {bad == 0, "k=1..12, " + std::to_string(bad) + " mismatches"};
}

// Connected graphs on 2..4 vertices up to isomorphism, by canonical edge
// masks under all vertex permutations.
std::vector<OlaGraph> small_connected_graphs() {
  std::vector<OlaGraph> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    std::set<unsigned> canon_seen;
    for (unsigned mask = 1; mask < (1u << slots.size()); ++mask) {
      unsigned canon = mask;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        unsigned image = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (!(mask >> s & 1)) continue;
          auto [a, b] = std::minmax(perm[slots[s].first], perm[slots[s].second]);
          for (std::size_t t = 0; t < slots.size(); ++t) {
            if (slots[t] == std::pair(a, b)) image |= 1u << t;
          }
        }
        canon = std::min(canon, image);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!canon_seen.insert(canon).second) continue;
      std::vector<std::string> ids;
      for (std::size_t v = 0; v < n; ++v) ids.push_back(std::string(1, static_cast<char>('a' + v)));
      std::vector<std::pair<std::string, std::string>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) edges.emplace_back(ids[slots[s].first], ids[slots[s].second]);
      }
      OlaGraph g = make_ola_graph(ids, edges);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

Outcome reduction_bound() {
  Outcome out;
  const auto graphs = small_connected_graphs();
  for (const OlaGraph& g : graphs) {
    const ReductionCheck c = verify_reduction(g);
    out.pass = out.pass && c.within_budget;
    out.detail += std::to_string(c.crossings.total) + "<=" + std::to_string(c.k_prime) + " ";
  }
  out.pass = out.pass && graphs.size() == 9;
  out.detail = std::to_string(graphs.size()) + " graphs (single vertex has no edge to reduce): " +
               out.detail;
  return out;
}

Outcome counter_agreement() {
  std::mt19937 rng(808);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const GraphPtr g = random_connected(rng, 2 + i % 8, 4, i % 4);
    const SubdivisionMap m = subdivide(g);
    const LevelAssignment lv = levels(*m.subdivided);
    LevelOrdering ord{std::vector<std::vector<VertexIndex>>(lv.count())};
    for (VertexIndex v = 0; v < m.subdivided->vertex_count(); ++v) ord.levels[lv.level[v]].push_back(v);
    for (auto& level : ord.levels) std::shuffle(level.begin(), level.end(), rng);
    const long long layered = count_crossings_layered(*m.subdivided, ord);
    const auto geometric = static_cast<long long>(
        count_crossings_geometric(realize_layered(m.subdivided, ord)).count);
    bad += layered != geometric;
  }
  return {bad == 0, "1000 orderings, " + std::to_string(bad) + " disagreements"};
}

Outcome tree_needs_crossings() {
  const auto g = std::make_shared<const ReebGraph>(
      parse_graph(read_file(std::string(REEBDRAW_FIXTURES) + "/tree_nonplanar.json")));
  const long long exact = exact_rgcn(g).crossings;
  const long long oracle = oracle_min_crossings(*g);
  return {classify_shape(*g) == ShapeClass::Tree && exact >= 1 && exact == oracle,
          "exact=" + std::to_string(exact) + " oracle=" + std::to_string(oracle)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means no limit
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "path/caterpillar layouts are planar", 5, planar_paths_and_caterpillars},
      {2, "bowtie is optimal", 10, bowtie_optimal},
      {3, "cycle layout has k-1 crossings", 0, cycle_theorem},
      {4, "subdivision keeps the crossing number", 60, subdivision_invariance},
      {5, "stretch straightens curved drawings", 0, stretching},
      {6, "hexagon grid counts", 0, grid_counts},
      {7, "reduction drawing within k'", 120, reduction_bound},
      {8, "layered and geometric counters agree", 0, counter_agreement},
      {9, "tree fixture needs a crossing", 0, tree_needs_crossings},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failed += !o.pass;
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}

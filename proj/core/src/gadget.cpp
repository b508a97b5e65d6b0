#include "reeb/gadget.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "reeb/crossings.hpp"

namespace reeb {

namespace {

using Json = nlohmann::ordered_json;

// Grid geometry in integer units: pointy-top hexagons two wide, rows three
// levels apart. Row j (from the bottom) holds k - j hexagons.
struct LocalGrid {
  std::vector<std::pair<long, long>> points;  // (x, level), sorted by (level, x)
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t apex = 0;
  std::vector<std::size_t> attach;
};

LocalGrid build_grid(int k) {
  std::set<std::pair<long, long>> by_level;  // (level, x)
  std::vector<std::array<std::pair<long, long>, 6>> hexes;
  for (long j = 0; j < k; ++j) {
    for (long i = 0; i + j < k; ++i) {
      const long cx = 2 * i + 1 + j;
      const long base = 3 * j;
      hexes.push_back({{{cx, base},
                        {cx - 1, base + 1},
                        {cx + 1, base + 1},
                        {cx - 1, base + 3},
                        {cx + 1, base + 3},
                        {cx, base + 4}}});
      for (const auto& [x, y] : hexes.back()) by_level.insert({y, x});
    }
  }
  LocalGrid g;
  std::map<std::pair<long, long>, std::size_t> index;
  for (const auto& [y, x] : by_level) {
    index[{x, y}] = g.points.size();
    g.points.emplace_back(x, y);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  static constexpr int kSides[6][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
  for (const auto& h : hexes) {
    for (const auto& s : kSides) {
      edges.insert(std::minmax(index.at(h[s[0]]), index.at(h[s[1]])));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  g.apex = index.at({k, 3L * k + 1});
  for (long x = 0; x <= 2L * k; ++x) g.attach.push_back(index.at({x, x % 2 == 0 ? 1 : 0}));

  const long kk = k;
  if (static_cast<long>(g.points.size()) != kk * kk + 4 * kk + 1 ||
      static_cast<long>(g.edges.size()) * 2 != 3 * (kk * kk + 3 * kk)) {
    throw Error(ErrorCode::Internal, "hexagon grid size does not match its closed form");
  }
  std::vector<int> degree(g.points.size(), 0);
  for (const auto& [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  if (*std::max_element(degree.begin(), degree.end()) > 3) {
    throw Error(ErrorCode::Internal, "hexagon grid has a vertex of degree above 3");
  }
  return g;
}

void require_arrangement(std::size_t n, const LinearArrangement& f) {
  if (f.position.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "arrangement has " + std::to_string(f.position.size()) +
                                                " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<bool> used(n + 1, false);
  for (std::size_t p : f.position) {
    if (p < 1 || p > n || used[p]) {
      throw Error(ErrorCode::InvalidArgument, "arrangement is not a bijection onto 1.." +
                                                  std::to_string(n));
    }
    used[p] = true;
  }
}

// Fixed heights of the gadget, in units of grid levels.
struct Heights {
  long bottom_boundary;
  long top_boundary;
  long top_apex;

  explicit Heights(long m)
      : bottom_boundary(3 * m + 1),
        top_boundary(bottom_boundary + 4 * m + 4),
        top_apex(top_boundary + 3 * m + 1) {}

  Rational middle() const { return Rational(bottom_boundary + top_boundary) / 2; }
};

Rational interpolate_x(const Point& from, const Point& to, const Rational& y) {
  return Rational(from.x + (to.x - from.x) * (y - from.y) / (to.y - from.y));
}

}  // namespace

TriHexGrid tri_hex_grid(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "hexagon grid needs at least one row");
  const LocalGrid local = build_grid(k);
  std::vector<VertexSpec> specs;
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < local.points.size(); ++i) {
    specs.push_back({"v" + std::to_string(i), Rational(local.points[i].second)});
    xs.emplace_back(local.points[i].first);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : local.edges) edges.push_back({a, b});
  auto graph = std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
  Drawing drawing(graph, std::move(xs));
  return TriHexGrid{k, graph, std::move(drawing), local.apex, local.attach};
}

OlaGraph make_ola_graph(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  OlaGraph g;
  std::map<std::string, std::size_t> index;
  for (auto& id : vertices) {
    if (!index.emplace(id, g.vertices.size()).second) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex id '" + id + "'");
    }
    g.vertices.push_back(std::move(id));
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
    return it->second;
  };
  for (const auto& [a, b] : edges) {
    const std::size_t u = lookup(a);
    const std::size_t v = lookup(b);
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at '" + a + "'");
    g.edges.emplace_back(u, v);
  }
  return g;
}

OlaGraph parse_ola_graph(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::MalformedJson, "expected an object with 'vertices' and 'edges' arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorCode::MalformedJson, "vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorCode::MalformedJson, "each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return make_ola_graph(std::move(vertices), edges);
}

std::string serialize_ola_graph(const OlaGraph& g) {
  Json doc;
  doc["vertices"] = g.vertices;
  doc["edges"] = Json::array();
  for (const auto& [u, v] : g.edges) doc["edges"].push_back({g.vertices[u], g.vertices[v]});
  return doc.dump(2);
}

bool is_connected(const OlaGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t parts = g.vertex_count();
  for (const auto& [u, v] : g.edges) {
    const std::size_t a = root(u);
    const std::size_t b = root(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

long long ola_cost(const OlaGraph& g, const LinearArrangement& f) {
  require_arrangement(g.vertex_count(), f);
  long long cost = 0;
  for (const auto& [u, v] : g.edges) {
    const auto a = static_cast<long long>(f.position[u]);
    const auto b = static_cast<long long>(f.position[v]);
    cost += a > b ? a - b : b - a;
  }
  return cost;
}

OlaSolution ola_brute(const OlaGraph& g, unsigned long long budget) {
  const std::size_t n = g.vertex_count();
  unsigned long long permutations = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (permutations > budget / i) {
      throw BudgetExhausted("arrangement search over " + std::to_string(n) +
                                " vertices exceeds the budget of " + std::to_string(budget),
                            -1);
    }
    permutations *= i;
  }
  if (permutations > budget) {
    throw BudgetExhausted("arrangement search exceeds the budget of " + std::to_string(budget), -1);
  }
  LinearArrangement f;
  f.position.resize(n);
  std::iota(f.position.begin(), f.position.end(), std::size_t{1});
  OlaSolution best{f, ola_cost(g, f)};
  while (std::next_permutation(f.position.begin(), f.position.end())) {
    const long long c = ola_cost(g, f);
    if (c < best.cost) best = {f, c};
  }
  return best;
}

long long gadget_budget(std::size_t edge_count, long long k) {
  const auto m = static_cast<long long>(edge_count);
  return m * m * (k - m) + (m * m - 1);
}

GadgetInstance ola_reduce(const OlaGraph& g, long long k) {
  if (g.edge_count() == 0) throw Error(ErrorCode::InvalidArgument, "reduction needs at least one edge");
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "the reduced graph is connected only if the source is");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const LocalGrid local = build_grid(static_cast<int>(m));
  const Heights heights(static_cast<long>(m));

  GadgetInstance inst;
  inst.source = g;
  inst.k = k;
  inst.k_prime = gadget_budget(m, k);
  inst.top.resize(n);
  inst.bottom.resize(n);
  inst.bundles.resize(n);

  std::vector<VertexSpec> specs;
  std::vector<Edge> edges;
  auto add_vertex = [&](std::string id, const Rational& h, const char* part) {
    specs.push_back({std::move(id), h});
    inst.vertex_parts.emplace_back(part);
    return specs.size() - 1;
  };
  auto add_edge = [&](VertexIndex a, VertexIndex b, const char* part) {
    edges.push_back({a, b});
    inst.edge_parts.emplace_back(part);
    return edges.size() - 1;
  };

  for (int row = 0; row < 2; ++row) {
    const bool is_top = row == 0;
    for (std::size_t v = 0; v < n; ++v) {
      GadgetGrid& grid = is_top ? inst.top[v] : inst.bottom[v];
      const std::string prefix = (is_top ? "T" : "B") + std::to_string(v) + ".";
      for (std::size_t i = 0; i < local.points.size(); ++i) {
        const long level = local.points[i].second;
        const long h = is_top ? heights.top_boundary + level : heights.bottom_boundary - level;
        grid.vertices.push_back(add_vertex(prefix + std::to_string(i), Rational(h), "V1"));
      }
      for (const auto& [a, b] : local.edges) add_edge(grid.vertices[a], grid.vertices[b], "E4");
      grid.connector = grid.vertices[local.apex];
      for (std::size_t i : local.attach) grid.attach.push_back(grid.vertices[i]);
    }
  }

  const std::size_t strands = m * m;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < strands; ++s) {
      const std::size_t a = s * inst.top[v].attach.size() / strands;
      inst.bundles[v].push_back(add_edge(inst.top[v].attach[a], inst.bottom[v].attach[a], "E2"));
    }
  }

  for (std::size_t e = 0; e < m; ++e) {
    const auto [a, b] = g.edges[e];
    GadgetLink link;
    link.source_edge = e;
    link.top_vertex = std::max(a, b);
    link.bottom_vertex = std::min(a, b);
    for (int row = 0; row < 2; ++row) {
      const bool is_top = row == 0;
      const std::size_t v = is_top ? link.top_vertex : link.bottom_vertex;
      GadgetGrid& grid = is_top ? inst.top[v] : inst.bottom[v];
      const long slot = static_cast<long>(grid.chain.size()) + 1;
      const long h = is_top ? heights.top_apex + slot : -slot;
      const VertexIndex prev = grid.chain.empty() ? grid.connector : grid.chain.back();
      grid.chain.push_back(add_vertex((is_top ? "T" : "B") + std::to_string(v) + ".c" +
                                          std::to_string(slot),
                                      Rational(h), "V2"));
      add_edge(prev, grid.chain.back(), "E3");
      (is_top ? link.top_slot : link.bottom_slot) = grid.chain.size() - 1;
    }
    inst.links.push_back(link);
  }
  for (GadgetLink& link : inst.links) {
    link.edge = add_edge(inst.top[link.top_vertex].chain[link.top_slot],
                         inst.bottom[link.bottom_vertex].chain[link.bottom_slot], "E1");
  }

  const std::size_t grid_vertices = m * m + 4 * m + 1;
  const std::size_t grid_edges = 3 * (m * m + 3 * m) / 2;
  if (specs.size() != 2 * n * grid_vertices + 2 * m ||
      edges.size() != 2 * n * grid_edges + n * strands + 3 * m) {
    throw Error(ErrorCode::Internal, "reduction size does not match its construction count");
  }
  inst.h = std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
  return inst;
}

Drawing arrangement_to_drawing(const GadgetInstance& inst, const LinearArrangement& f_top,
                               const LinearArrangement& f_bottom) {
  const std::size_t n = inst.source.vertex_count();
  require_arrangement(n, f_top);
  require_arrangement(n, f_bottom);
  const ReebGraph& h = *inst.h;
  const long m = static_cast<long>(inst.source.edge_count());
  const LocalGrid local = build_grid(static_cast<int>(m));
  const Heights heights(m);
  const long pitch = 4 * m + 2;
  auto column_x = [&](std::size_t position) -> Rational {
    return Rational(static_cast<long>(position - 1) * pitch);
  };

  std::vector<Rational> xs(h.vertex_count());
  std::vector<std::vector<Point>> bends(h.edge_count());
  for (std::size_t v = 0; v < n; ++v) {
    for (int row = 0; row < 2; ++row) {
      const GadgetGrid& grid = row == 0 ? inst.top[v] : inst.bottom[v];
      const Rational base = column_x(row == 0 ? f_top.position[v] : f_bottom.position[v]);
      for (std::size_t i = 0; i < grid.vertices.size(); ++i) {
        xs[grid.vertices[i]] = base + local.points[i].first;
      }
      for (VertexIndex c : grid.chain) xs[c] = base + m;
    }
  }

  // Strands: one bend at mid-height, spread evenly across the column. When
  // the two grids sit in different columns, extra bends just outside each
  // grid keep the strand clear of the boundary vertices.
  const Rational mid = heights.middle();
  const long strands = m * m;
  for (std::size_t v = 0; v < n; ++v) {
    const Rational top_base = column_x(f_top.position[v]);
    const Rational bottom_base = column_x(f_bottom.position[v]);
    for (long s = 0; s < strands; ++s) {
      const EdgeIndex e = inst.bundles[v][static_cast<std::size_t>(s)];
      const Rational offset = Rational(2 * m * (s + 1)) / (strands + 1);
      const Point top_end{xs[h.edge(e).u], h.height(h.edge(e).u)};
      const Point bottom_end{xs[h.edge(e).v], h.height(h.edge(e).v)};
      if (top_base == bottom_base) {
        bends[e] = {{top_base + offset, mid}};
        continue;
      }
      const Point top_aim{top_base + offset, mid};
      const Point bottom_aim{bottom_base + offset, mid};
      const Rational below_top = Rational(heights.top_boundary) - Rational(1, 2);
      const Rational above_bottom = Rational(heights.bottom_boundary) + Rational(1, 2);
      bends[e] = {{interpolate_x(bottom_end, bottom_aim, above_bottom), above_bottom},
                  {Rational(top_aim.x + bottom_aim.x) / 2, mid},
                  {interpolate_x(top_end, top_aim, below_top), below_top}};
    }
  }

  // Links leave the top chain through the gap beside the grid on the side of
  // their target and enter the bottom chain from the side they arrive on.
  // Chain copies further from the grid take gap lanes further out.
  std::vector<long> right_lanes(2 * n, 0);
  std::vector<long> left_lanes(2 * n, 0);
  std::vector<const GadgetLink*> by_top(inst.links.size());
  std::vector<const GadgetLink*> by_bottom(inst.links.size());
  std::vector<Rational> top_gap(inst.links.size());
  std::vector<Rational> bottom_gap(inst.links.size());
  std::vector<std::size_t> order(inst.links.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto lane = [&](bool right, std::size_t key) {
    return right ? ++right_lanes[key] : ++left_lanes[key];
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(inst.links[a].top_vertex, inst.links[a].top_slot) <
           std::pair(inst.links[b].top_vertex, inst.links[b].top_slot);
  });
  for (std::size_t i : order) {
    const GadgetLink& l = inst.links[i];
    const std::size_t p = f_top.position[l.top_vertex];
    const std::size_t q = f_bottom.position[l.bottom_vertex];
    const bool right = q >= p;
    const long r = lane(right, l.top_vertex);
    top_gap[i] = right ? Rational(column_x(p) + 2 * m + r) : Rational(column_x(p) - r);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(inst.links[a].bottom_vertex, inst.links[a].bottom_slot) <
           std::pair(inst.links[b].bottom_vertex, inst.links[b].bottom_slot);
  });
  for (std::size_t i : order) {
    const GadgetLink& l = inst.links[i];
    const std::size_t p = f_top.position[l.top_vertex];
    const std::size_t q = f_bottom.position[l.bottom_vertex];
    const bool from_left = p < q;
    const long r = lane(!from_left, n + l.bottom_vertex);
    bottom_gap[i] = from_left ? Rational(column_x(q) - r) : Rational(column_x(q) + 2 * m + r);
  }
  for (std::size_t i = 0; i < inst.links.size(); ++i) {
    bends[inst.links[i].edge] = {{bottom_gap[i], Rational(0)},
                                 {bottom_gap[i], Rational(heights.bottom_boundary)},
                                 {top_gap[i], Rational(heights.top_boundary)},
                                 {top_gap[i], Rational(heights.top_apex)}};
  }
  return Drawing(inst.h, std::move(xs), std::move(bends));
}

std::pair<LinearArrangement, LinearArrangement> extract_arrangement(const Drawing& d,
                                                                     const GadgetInstance& inst) {
  if (d.graph() != *inst.h) {
    throw Error(ErrorCode::InvalidArgument, "drawing is not of the gadget graph");
  }
  const std::size_t n = inst.source.vertex_count();
  auto order_of = [&](const std::vector<GadgetGrid>& grids, const char* row) {
    std::vector<std::size_t> vs(n);
    std::iota(vs.begin(), vs.end(), std::size_t{0});
    std::sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) {
      return d.x(grids[a].connector) < d.x(grids[b].connector);
    });
    LinearArrangement f;
    f.position.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && d.x(grids[vs[i]].connector) == d.x(grids[vs[i - 1]].connector)) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("two ") + row + "-row connectors share an x coordinate");
      }
      f.position[vs[i]] = i + 1;
    }
    return f;
  };
  return {order_of(inst.top, "top"), order_of(inst.bottom, "bottom")};
}

GadgetCrossings classify_crossings(const Drawing& d, const GadgetInstance& inst) {
  const CrossingCertificate cert = count_crossings_geometric(d);
  GadgetCrossings out;
  out.total = cert.count;
  for (const Crossing& c : cert.crossings) {
    std::string a = inst.edge_parts[c.first];
    std::string b = inst.edge_parts[c.second];
    if (a > b) std::swap(a, b);
    if (a == "E1" && b == "E2") {
      ++out.link_bundle;
    } else if (a == "E1" && b == "E1") {
      ++out.link_link;
    } else {
      ++out.other;
    }
  }
  return out;
}

ReductionCheck verify_reduction(const OlaGraph& g, unsigned long long budget) {
  ReductionCheck check;
  check.optimum = ola_brute(g, budget);
  const GadgetInstance inst = ola_reduce(g, check.optimum.cost);
  check.k_prime = inst.k_prime;
  check.h_vertices = inst.h->vertex_count();
  check.h_edges = inst.h->edge_count();
  check.crossings = classify_crossings(arrangement_to_drawing(inst, check.optimum.arrangement), inst);
  check.within_budget = static_cast<long long>(check.crossings.total) <= check.k_prime;
  return check;
}

}  // namespace reeb

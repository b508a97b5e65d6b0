#include "reeb/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reeb {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorCode::MalformedJson, message);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

Rational number(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return parse_rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  malformed(what + " must be a number or a numeric string");
}

std::string text_of(const Json& j, const std::string& what) {
  if (!j.is_string()) malformed(what + " must be a string");
  return j.get<std::string>();
}

Json graph_json(const ReebGraph& g) {
  Json vertices = Json::array();
  for (const VertexSpec& v : g.vertices()) {
    vertices.push_back(Json{{"id", v.id}, {"height", to_string(v.height)}});
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({g.id(e.u), g.id(e.v)}));
  return Json{{"vertices", vertices}, {"edges", edges}};
}

ReebGraph graph_from(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) malformed("'vertices' and 'edges' must be arrays");
  std::vector<VertexSpec> specs;
  specs.reserve(vs.size());
  for (const Json& v : vs) {
    specs.push_back({text_of(field(v, "id"), "vertex id"), number(field(v, "height"), "height")});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(es.size());
  for (const Json& e : es) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair of vertex ids");
    edges.emplace_back(text_of(e[0], "edge endpoint"), text_of(e[1], "edge endpoint"));
  }
  return ReebGraph(std::move(specs), edges);
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace

ReebGraph parse_graph(std::string_view text) { return graph_from(parse_json(text)); }

std::string serialize_graph(const ReebGraph& g) { return graph_json(g).dump(2) + "\n"; }

Drawing parse_drawing(std::string_view text) {
  const Json j = parse_json(text);
  auto g = std::make_shared<const ReebGraph>(graph_from(field(j, "graph")));

  const Json& xj = field(j, "x");
  if (!xj.is_object()) malformed("'x' must map vertex ids to coordinates");
  std::vector<Rational> x(g->vertex_count());
  std::vector<bool> seen(g->vertex_count(), false);
  for (const auto& [id, value] : xj.items()) {
    const VertexIndex v = g->index_of(id);
    x[v] = number(value, "x of '" + id + "'");
    seen[v] = true;
  }
  for (VertexIndex v = 0; v < g->vertex_count(); ++v) {
    if (!seen[v]) malformed("missing x for vertex '" + g->id(v) + "'");
  }

  std::vector<std::vector<Point>> bends(g->edge_count());
  if (auto it = j.find("edges"); it != j.end()) {
    if (!it->is_array() || it->size() != g->edge_count()) {
      malformed("'edges' must list every graph edge once, in graph order");
    }
    for (EdgeIndex e = 0; e < g->edge_count(); ++e) {
      const Json& ej = (*it)[e];
      const Json& ends = field(ej, "endpoints");
      if (!ends.is_array() || ends.size() != 2) malformed("'endpoints' must be a pair");
      const VertexIndex a = g->index_of(text_of(ends[0], "endpoint"));
      const VertexIndex b = g->index_of(text_of(ends[1], "endpoint"));
      const Edge& ed = g->edge(e);
      if (!((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u))) {
        malformed("drawing edge " + std::to_string(e) + " does not match graph edge order");
      }
      if (auto bj = ej.find("bends"); bj != ej.end()) {
        if (!bj->is_array()) malformed("'bends' must be an array");
        for (const Json& p : *bj) {
          if (!p.is_array() || p.size() != 2) malformed("each bend must be an [x, y] pair");
          bends[e].push_back({number(p[0], "bend x"), number(p[1], "bend y")});
        }
      }
    }
  }
  return Drawing(std::move(g), std::move(x), std::move(bends));
}

std::string serialize_drawing(const Drawing& d) {
  const ReebGraph& g = d.graph();
  Json x = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) x[g.id(v)] = to_string(d.x(v));
  Json edges = Json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    Json bends = Json::array();
    for (const Point& p : d.bends(e)) bends.push_back(point_json(p));
    edges.push_back(Json{{"endpoints", Json::array({g.id(g.edge(e).u), g.id(g.edge(e).v)})},
                         {"bends", bends}});
  }
  return Json{{"graph", graph_json(g)}, {"x", x}, {"edges", edges}}.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace reeb

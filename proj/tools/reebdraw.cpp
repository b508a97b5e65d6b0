// reebdraw: command-line front end to the reeb drawing library.
//
// Exit status: 0 on success, 1 on invalid input or a failed check, 2 when a
// search runs out of budget. Errors go to stderr as a single JSON object.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reeb/crossings.hpp"
#include "reeb/gadget.hpp"
#include "reeb/io.hpp"
#include "reeb/layout.hpp"
#include "reeb/stretch.hpp"
#include "reeb/subdivide.hpp"
#include "reeb/svg.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace reeb;

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::string algorithm = "auto";
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> seed;  // accepted for fixture scripts; nothing here is random
  bool level_lines = false;
  int rows = 1;
  std::string ola_graph;
  long long ola_budget = 0;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(o.output, text);
  }
}

void emit(const Options& o, const Json& doc) { emit(o, doc.dump(2)); }

void maybe_svg(const Options& o, const Drawing& d, const std::vector<std::string>& parts = {}) {
  if (o.svg.empty()) return;
  RenderOptions r;
  r.level_lines = o.level_lines;
  r.color_by_part = !parts.empty();
  write_file(o.svg, render_svg(d, r, parts));
}

std::shared_ptr<const ReebGraph> load_graph(const Options& o) {
  return std::make_shared<const ReebGraph>(parse_graph(read_input(o.input)));
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

void cmd_validate(const Options& o) {
  const auto g = load_graph(o);
  const ValidationReport r = validate(*g);
  Json doc;
  doc["generic"] = r.is_generic;
  doc["subdivided"] = r.is_subdivided;
  doc["connected"] = r.is_connected;
  doc["shape"] = r.is_connected ? to_string(classify_shape(*g)) : "disconnected";
  doc["violations"] = Json::array();
  for (const Violation& v : r.violations) {
    Json item{{"rule", v.rule}, {"message", v.message}};
    if (v.vertex) item["vertex"] = g->id(*v.vertex);
    if (v.edge) item["edge"] = *v.edge;
    doc["violations"].push_back(item);
  }
  emit(o, doc);
}

void cmd_subdivide(const Options& o) {
  emit(o, serialize_graph(*subdivide(load_graph(o)).subdivided));
}

Drawing run_layout(const Options& o, std::shared_ptr<const ReebGraph> g) {
  const std::string& a = o.algorithm;
  if (a == "auto") return layout_auto(g, o.budget.value_or(kDefaultAutoBudget));
  if (a == "path") return layout_path(g);
  if (a == "caterpillar") return layout_caterpillar(g);
  if (a == "cycle") return layout_cycle(g);
  if (a == "bowtie") return layout_bowtie(g);
  if (a == "exact") return layout_exact(g, o.budget);
  if (a == "heuristic") return layout_heuristic(g);
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + a + "'");
}

void cmd_layout(const Options& o) {
  const Drawing d = run_layout(o, load_graph(o));
  maybe_svg(o, d);
  emit(o, serialize_drawing(d));
}

void cmd_crossings(const Options& o) {
  const Drawing d = parse_drawing(read_input(o.input));
  const CrossingCertificate c = count_crossings_geometric(d);
  const ReebGraph& g = d.graph();
  Json doc;
  doc["count"] = c.count;
  doc["crossings"] = Json::array();
  for (const Crossing& x : c.crossings) {
    const Edge& a = g.edge(x.first);
    const Edge& b = g.edge(x.second);
    doc["crossings"].push_back(
        {{"edges", Json::array({Json::array({g.id(a.u), g.id(a.v)}), Json::array({g.id(b.u), g.id(b.v)})})},
         {"at", point_json(x.at)}});
  }
  emit(o, doc);
}

void cmd_exact(const Options& o) {
  const auto g = load_graph(o);
  const ExactResult r = exact_rgcn(g, o.budget);
  Json doc;
  doc["crossings"] = r.crossings;
  doc["states"] = r.states;
  const Drawing d = unsubdivide_drawing(realize_layered(r.subdivision.subdivided, r.witness), r.subdivision);
  maybe_svg(o, d);
  doc["drawing"] = Json::parse(serialize_drawing(d));
  emit(o, doc);
}

void cmd_stretch(const Options& o) {
  const Drawing d = stretch(parse_drawing(read_input(o.input)));
  maybe_svg(o, d);
  emit(o, serialize_drawing(d));
}

void cmd_render(const Options& o) {
  const Drawing d = parse_drawing(read_input(o.input));
  RenderOptions r;
  r.level_lines = o.level_lines;
  const std::string svg = render_svg(d, r);
  if (!o.svg.empty()) write_file(o.svg, svg);
  if (o.svg.empty() || !o.output.empty()) emit(o, svg);
}

void cmd_hexgrid(const Options& o) {
  const TriHexGrid t = tri_hex_grid(o.rows);
  maybe_svg(o, t.drawing);
  emit(o, serialize_drawing(t.drawing));
}

Json arrangement_json(const OlaGraph& g, const LinearArrangement& f) {
  Json out = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out[g.vertices[v]] = f.position[v];
  return out;
}

void cmd_ola_reduce(const Options& o) {
  const OlaGraph g = parse_ola_graph(read_input(o.ola_graph));
  const GadgetInstance inst = ola_reduce(g, o.ola_budget);
  Json doc;
  doc["k"] = inst.k;
  doc["k_prime"] = inst.k_prime;
  doc["graph"] = Json::parse(serialize_graph(*inst.h));
  doc["vertex_parts"] = inst.vertex_parts;
  doc["edge_parts"] = inst.edge_parts;
  if (!o.svg.empty()) {
    LinearArrangement identity;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) identity.position.push_back(v + 1);
    maybe_svg(o, arrangement_to_drawing(inst, identity), inst.edge_parts);
  }
  emit(o, doc);
}

void cmd_ola_brute(const Options& o) {
  const OlaGraph g = parse_ola_graph(read_input(o.ola_graph));
  const OlaSolution s = ola_brute(g, o.budget.value_or(kDefaultOlaBudget));
  emit(o, Json{{"cost", s.cost}, {"arrangement", arrangement_json(g, s.arrangement)}});
}

// Returns false when the drawing exceeds k'.
bool cmd_verify(const Options& o) {
  const OlaGraph g = parse_ola_graph(read_input(o.ola_graph));
  const ReductionCheck c = verify_reduction(g, o.budget.value_or(kDefaultOlaBudget));
  Json doc;
  doc["cost"] = c.optimum.cost;
  doc["arrangement"] = arrangement_json(g, c.optimum.arrangement);
  doc["k_prime"] = c.k_prime;
  doc["h_vertices"] = c.h_vertices;
  doc["h_edges"] = c.h_edges;
  doc["crossings"] = {{"total", c.crossings.total},
                      {"e1_e2", c.crossings.link_bundle},
                      {"e1_e1", c.crossings.link_link},
                      {"other", c.crossings.other}};
  doc["within_budget"] = c.within_budget;
  if (!o.svg.empty()) {
    const GadgetInstance inst = ola_reduce(g, c.optimum.cost);
    maybe_svg(o, arrangement_to_drawing(inst, c.optimum.arrangement), inst.edge_parts);
  }
  emit(o, doc);
  return c.within_budget;
}

void report(const std::string& code, const std::string& message,
            std::optional<long long> best = std::nullopt) {
  Json err{{"code", code}, {"message", message}};
  if (best) err["best_so_far"] = *best;
  std::cerr << Json{{"error", err}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Draw Reeb graphs with few crossings"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->default_str("-");
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };
  auto add_svg = [&](CLI::App* sub) {
    sub->add_option("--svg", o.svg, "Also write an SVG rendering");
    sub->add_flag("--level-lines", o.level_lines, "Draw a guide line at every vertex height");
  };
  auto add_common = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Ignored; all algorithms are deterministic"); };

  auto* validate_cmd = app.add_subcommand("validate", "Report genericity, subdivision and shape");
  add_io(validate_cmd, "Graph JSON");
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivide edges to span consecutive levels");
  add_io(subdivide_cmd, "Graph JSON");
  auto* layout_cmd = app.add_subcommand("layout", "Compute a drawing");
  add_io(layout_cmd, "Graph JSON");
  add_svg(layout_cmd);
  layout_cmd->add_option("--algorithm", o.algorithm, "auto|path|caterpillar|cycle|bowtie|exact|heuristic")
      ->check(CLI::IsMember({"auto", "path", "caterpillar", "cycle", "bowtie", "exact", "heuristic"}));
  layout_cmd->add_option("--budget", o.budget, "Search state budget for exact and auto");
  auto* crossings_cmd = app.add_subcommand("crossings", "Count the crossings of a drawing");
  add_io(crossings_cmd, "Drawing JSON");
  auto* exact_cmd = app.add_subcommand("exact", "Minimum crossing number by exhaustive search");
  add_io(exact_cmd, "Graph JSON");
  add_svg(exact_cmd);
  exact_cmd->add_option("--budget", o.budget, "Search state budget");
  auto* stretch_cmd = app.add_subcommand("stretch", "Straighten a crossing-free drawing");
  add_io(stretch_cmd, "Drawing JSON");
  add_svg(stretch_cmd);
  auto* render_cmd = app.add_subcommand("render", "Render a drawing as SVG");
  add_io(render_cmd, "Drawing JSON");
  add_svg(render_cmd);

  auto* gadget_cmd = app.add_subcommand("gadget", "Hardness reduction tools");
  gadget_cmd->require_subcommand(1);
  auto* hexgrid_cmd = gadget_cmd->add_subcommand("hexgrid", "Triangular hexagon grid drawing");
  hexgrid_cmd->add_option("--rows", o.rows, "Number of hexagon rows")->required();
  hexgrid_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  add_svg(hexgrid_cmd);
  auto* reduce_cmd = gadget_cmd->add_subcommand("ola-reduce", "Build the reduced Reeb graph and k'");
  reduce_cmd->add_option("--graph", o.ola_graph, "Arrangement instance JSON")->required();
  reduce_cmd->add_option("--budget", o.ola_budget, "Arrangement cost bound k")->required();
  reduce_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  reduce_cmd->add_option("--svg", o.svg, "SVG of the drawing for the identity arrangement");
  auto* brute_cmd = gadget_cmd->add_subcommand("ola-brute", "Optimal linear arrangement by enumeration");
  brute_cmd->add_option("--graph", o.ola_graph, "Arrangement instance JSON")->required();
  brute_cmd->add_option("--budget", o.budget, "Maximum number of arrangements to enumerate");
  brute_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  auto* verify_cmd = gadget_cmd->add_subcommand("verify", "Check the reduced drawing against k'");
  verify_cmd->add_option("--graph", o.ola_graph, "Arrangement instance JSON")->required();
  verify_cmd->add_option("--budget", o.budget, "Maximum number of arrangements to enumerate");
  verify_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
  verify_cmd->add_option("--svg", o.svg, "SVG of the optimal reduced drawing");

  for (CLI::App* sub : {validate_cmd, subdivide_cmd, layout_cmd, crossings_cmd, exact_cmd, stretch_cmd,
                        render_cmd, hexgrid_cmd, reduce_cmd, brute_cmd, verify_cmd}) {
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", e.what());
    return 1;
  }

  try {
    if (*validate_cmd) cmd_validate(o);
    else if (*subdivide_cmd) cmd_subdivide(o);
    else if (*layout_cmd) cmd_layout(o);
    else if (*crossings_cmd) cmd_crossings(o);
    else if (*exact_cmd) cmd_exact(o);
    else if (*stretch_cmd) cmd_stretch(o);
    else if (*render_cmd) cmd_render(o);
    else if (*hexgrid_cmd) cmd_hexgrid(o);
    else if (*reduce_cmd) cmd_ola_reduce(o);
    else if (*brute_cmd) cmd_ola_brute(o);
    else if (*verify_cmd && !cmd_verify(o)) {
      report("check_failed", "reduced drawing exceeds k'");
      return 1;
    }
  } catch (const BudgetExhausted& e) {
    report(to_string(e.code()), e.what(), e.best_so_far() >= 0 ? std::optional(e.best_so_far()) : std::nullopt);
    return 2;
  } catch (const Error& e) {
    report(to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    report("internal", e.what());
    return 1;
  }
  return 0;
}

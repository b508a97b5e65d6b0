#include <gtest/gtest.h>

#include <regex>

#include "reeb/io.hpp"
#include "reeb/layout.hpp"
#include "reeb/svg.hpp"
#include "support.hpp"

using namespace reeb;
using reeb::test::make;
using reeb::test::make_int;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

struct Seg {
  double x0, y0, x1, y1;
};

std::vector<std::vector<std::pair<double, double>>> polylines(const std::string& svg) {
  std::vector<std::vector<std::pair<double, double>>> out;
  const std::regex line("<polyline points=\"([^\"]*)\"");
  const std::regex pt("(-?[0-9.]+),(-?[0-9.]+)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator();
       ++it) {
    const std::string pts = (*it)[1];
    std::vector<std::pair<double, double>> poly;
    for (auto p = std::sregex_iterator(pts.begin(), pts.end(), pt); p != std::sregex_iterator();
         ++p) {
      poly.emplace_back(std::stod((*p)[1]), std::stod((*p)[2]));
    }
    out.push_back(poly);
  }
  return out;
}

bool proper_intersection(const Seg& a, const Seg& b) {
  auto orient = [](double ax, double ay, double bx, double by, double cx, double cy) {
    const double v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return (v > 1e-9) - (v < -1e-9);
  };
  return orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0) * orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1) < 0 &&
         orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0) * orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1) < 0;
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  auto g = make({{"a", "0"}, {"b", "1/3"}, {"c", "-2"}}, {{"a", "b"}, {"c", "b"}});
  const ReebGraph back = parse_graph(serialize_graph(*g));
  EXPECT_EQ(back, *g);
  EXPECT_EQ(back.height(1), Rational(1, 3));
}

TEST(Io, HeightsStoredExactly) {
  const ReebGraph g = parse_graph(R"({"vertices":[{"id":"a","height":"1/3"},
      {"id":"b","height":0.25},{"id":"c","height":"0.1"},{"id":"d","height":7}],
      "edges":[["a","b"],["c","d"]]})");
  EXPECT_EQ(g.height(0), Rational(1, 3));
  EXPECT_EQ(g.height(1), Rational(1, 4));
  EXPECT_EQ(g.height(2), Rational(1, 10));
  EXPECT_EQ(g.height(3), Rational(7));
}

TEST(Io, MalformedInputs) {
  EXPECT_EQ(code_of([] { parse_graph("{not json"); }), ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":[]})"); }), ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":[{"id":"a","height":"x"}],"edges":[]})"); }),
            ErrorCode::BadNumber);
  EXPECT_EQ(code_of([] { parse_graph(R"({"vertices":[{"id":"a","height":1}],"edges":[["a","q"]]})"); }),
            ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] {
              parse_graph(R"({"vertices":[{"id":"a","height":1},{"id":"b","height":1}],
                              "edges":[["a","b"]]})");
            }),
            ErrorCode::HorizontalEdge);
}

TEST(Io, DrawingRoundTrip) {
  const Drawing d = layout_bowtie(reeb::test::alternating_cycle(6));
  const Drawing back = parse_drawing(serialize_drawing(d));
  EXPECT_EQ(back, d);
  EXPECT_EQ(serialize_drawing(back), serialize_drawing(d));
}

TEST(Io, DrawingWithBendsRoundTrip) {
  auto g = make_int({0, 2}, {{0, 1}, {0, 1}});
  std::vector<std::vector<Point>> bends(2);
  bends[1] = {{Rational(1, 3), Rational(1)}};
  const Drawing d(g, {Rational(0), Rational(0)}, bends);
  const Drawing back = parse_drawing(serialize_drawing(d));
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.bends(1)[0].x, Rational(1, 3));
}

TEST(Io, DrawingMissingXNamesVertex) {
  const std::string text = R"({"graph":{"vertices":[{"id":"a","height":0},{"id":"bee","height":1}],
      "edges":[["a","bee"]]},"x":{"a":0}})";
  EXPECT_EQ(code_of([&] { parse_drawing(text); }), ErrorCode::MalformedJson);
  EXPECT_NE(message_of([&] { parse_drawing(text); }).find("bee"), std::string::npos);
}

TEST(Io, DrawingRejectsDecreasingBends) {
  const std::string text = R"({"graph":{"vertices":[{"id":"a","height":0},{"id":"b","height":3}],
      "edges":[["a","b"]]},"x":{"a":0,"b":0},
      "edges":[{"endpoints":["a","b"],"bends":[["1","2"],["1","1"]]}]})";
  EXPECT_EQ(code_of([&] { parse_drawing(text); }), ErrorCode::InvalidDrawing);
}

TEST(Io, DrawingRejectsMisorderedEdges) {
  const std::string text = R"({"graph":{"vertices":[{"id":"a","height":0},{"id":"b","height":3},
      {"id":"c","height":1}],"edges":[["a","b"],["a","c"]]},"x":{"a":0,"b":0,"c":1},
      "edges":[{"endpoints":["a","c"],"bends":[]},{"endpoints":["a","b"],"bends":[]}]})";
  EXPECT_EQ(code_of([&] { parse_drawing(text); }), ErrorCode::MalformedJson);
}

TEST(Svg, SingleVertexIsCentred) {
  auto g = std::make_shared<const ReebGraph>(std::vector<VertexSpec>{{"a", Rational(0)}},
                                             std::vector<Edge>{});
  const std::string svg = render_svg(Drawing(g, {Rational(5)}));
  EXPECT_NE(svg.find("cx=\"400.000\" cy=\"300.000\""), std::string::npos);
}

TEST(Svg, EdgeIsPolylineWithLargerHeightHigher) {
  auto g = make_int({0, 1}, {{0, 1}});
  const std::string svg = render_svg(Drawing(g, {Rational(0), Rational(1)}));
  const auto lines = polylines(svg);
  ASSERT_EQ(lines.size(), 1u);
  ASSERT_EQ(lines[0].size(), 2u);
  EXPECT_GT(lines[0][0].second, lines[0][1].second);
  EXPECT_DOUBLE_EQ(lines[0][0].first, 40.0);
  EXPECT_DOUBLE_EQ(lines[0][1].first, 760.0);
}

TEST(Svg, BowtieSegmentsIntersectOnScreen) {
  const std::string svg = render_svg(layout_bowtie(reeb::test::alternating_cycle(4)));
  const auto lines = polylines(svg);
  std::vector<std::pair<std::size_t, Seg>> segs;
  for (std::size_t e = 0; e < lines.size(); ++e) {
    for (std::size_t i = 0; i + 1 < lines[e].size(); ++i) {
      segs.push_back({e, {lines[e][i].first, lines[e][i].second, lines[e][i + 1].first,
                          lines[e][i + 1].second}});
    }
  }
  int hits = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].first != segs[j].first) hits += proper_intersection(segs[i].second, segs[j].second);
    }
  }
  EXPECT_EQ(hits, 1);
}

TEST(Svg, DeterministicAndOptionsChecked) {
  const Drawing d = layout_cycle(reeb::test::cycle({0, 2, 1, 3}));
  RenderOptions o;
  o.level_lines = true;
  EXPECT_EQ(render_svg(d, o), render_svg(d, o));
  EXPECT_NE(render_svg(d, o).find("class=\"levels\""), std::string::npos);
  RenderOptions bad;
  bad.margin = 500;
  EXPECT_EQ(code_of([&] { render_svg(d, bad); }), ErrorCode::InvalidArgument);
}

TEST(Svg, PartColours) {
  auto g = make_int({0, 1, 0}, {{0, 1}, {1, 2}});
  const Drawing d(g, {Rational(0), Rational(1), Rational(2)});
  RenderOptions o;
  o.color_by_part = true;
  const std::vector<std::string> parts{"E1", "E2"};
  const std::string svg = render_svg(d, o, parts);
  EXPECT_NE(svg.find("#e67e22"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
}

#include <gtest/gtest.h>

#include "reeb/graph.hpp"
#include "support.hpp"

using namespace reeb;
using reeb::test::make;
using reeb::test::make_int;

TEST(Rational, ParsesAllForms) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1e3", "abc", "1/0", "1/-2", "--1", ".", "1.2.3", " 1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadNumber) << bad;
    }
  }
}

TEST(Graph, RejectsStructuralErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of([] { make({{"a", "0"}, {"a", "1"}}, {}); }), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of([] { make({{"a", "0"}}, {{"a", "b"}}); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] { make({{"a", "0"}}, {{"a", "a"}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { make({{"a", "0"}, {"b", "0"}}, {{"a", "b"}}); }),
            ErrorCode::HorizontalEdge);
}

TEST(Degree, SingleEdge) {
  auto g = make({{"a", "0"}, {"b", "1"}}, {{"a", "b"}});
  auto d = degree_profile(*g);
  EXPECT_EQ(d.total[0], 1);
  EXPECT_EQ(d.up[0], 1);
  EXPECT_EQ(d.down[0], 0);
}

TEST(Degree, ParallelEdgesCountWithMultiplicity) {
  auto g = make({{"a", "0"}, {"b", "1"}}, {{"a", "b"}, {"a", "b"}});
  auto d = degree_profile(*g);
  EXPECT_EQ(d.total[0], 2);
  EXPECT_EQ(d.up[0], 2);
}

TEST(Degree, BranchVertex) {
  // One edge down, two up, like the branch vertex of a torus Reeb graph.
  auto g = make({{"min", "0"}, {"s", "1"}, {"l", "2"}, {"r", "3"}},
                {{"min", "s"}, {"s", "l"}, {"s", "r"}});
  auto d = degree_profile(*g);
  EXPECT_EQ(d.total[1], 3);
  EXPECT_EQ(d.down[1], 1);
  EXPECT_EQ(d.up[1], 2);
}

TEST(Levels, Examples) {
  auto g1 = make({{"a", "0.5"}, {"b", "2.0"}, {"c", "7.3"}}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(levels(*g1).level, (std::vector<int>{0, 1, 2}));
  auto g2 = make({{"a", "1.0"}, {"b", "1.0"}, {"c", "3.0"}}, {{"a", "c"}, {"b", "c"}});
  EXPECT_EQ(levels(*g2).level, (std::vector<int>{0, 0, 1}));
  const ReebGraph empty;
  EXPECT_EQ(levels(empty).count(), 0);
  EXPECT_TRUE(levels(empty).level.empty());
}

TEST(Validate, SimplePathIsGenericAndSubdivided) {
  auto g = make({{"a", "0"}, {"b", "1"}}, {{"a", "b"}});
  auto r = validate(*g);
  EXPECT_TRUE(r.is_generic);
  EXPECT_TRUE(r.is_subdivided);
  EXPECT_TRUE(r.is_connected);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Validate, DegreeFiveVertexNamed) {
  auto g = make({{"v", "0"}, {"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}, {"e", "5"}},
                {{"v", "a"}, {"v", "b"}, {"v", "c"}, {"v", "d"}, {"v", "e"}});
  auto r = validate(*g);
  EXPECT_FALSE(r.is_generic);
  bool named = false;
  for (const auto& v : r.violations) {
    if (v.rule == "generic.degree" && v.vertex && g->id(*v.vertex) == "v") named = true;
  }
  EXPECT_TRUE(named);
}

TEST(Validate, LevelSkippingEdgeNamed) {
  auto g = make({{"a", "0"}, {"b", "1"}, {"c", "2"}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto r = validate(*g);
  EXPECT_FALSE(r.is_subdivided);
  bool named = false;
  for (const auto& v : r.violations) {
    if (v.rule == "subdivided.consecutive_levels" && v.edge == 2u) named = true;
  }
  EXPECT_TRUE(named);
}

TEST(Validate, ReportsDisconnected) {
  auto g = make({{"a", "0"}, {"b", "1"}, {"c", "2"}, {"d", "3"}}, {{"a", "b"}, {"c", "d"}});
  auto r = validate(*g);
  EXPECT_FALSE(r.is_connected);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_shape(*make_int({0, 2, 1, 3}, {{0, 1}, {1, 2}, {2, 3}})), ShapeClass::Path);
  // Spine 1-2-3 with single legs.
  EXPECT_EQ(classify_shape(*make_int({0, 2, 4, 6, 1, 5, 7},
                                     {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}})),
            ShapeClass::Caterpillar);
  EXPECT_EQ(classify_shape(*make_int({0, 1}, {{0, 1}, {0, 1}})), ShapeClass::SingleCycle);
  // A spider with three legs of length two is a tree but not a caterpillar.
  EXPECT_EQ(classify_shape(*make_int({0, 1, 2, 3, 4, 5, 6},
                                     {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})),
            ShapeClass::Tree);
  EXPECT_EQ(classify_shape(*make_int({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}, {0, 1}})),
            ShapeClass::General);
}

TEST(Classify, DisconnectedIsError) {
  auto g = make({{"a", "0"}, {"b", "1"}, {"c", "2"}, {"d", "3"}}, {{"a", "b"}, {"c", "d"}});
  try {
    classify_shape(*g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(CoreProperties, DegreeSumAndMonotoneRelabeling) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = reeb::test::random_connected(rng, 2 + iter % 9, 5, iter % 4);
    const auto d = degree_profile(*g);
    int sum = 0;
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      EXPECT_EQ(d.down[v] + d.up[v], d.total[v]);
      sum += d.total[v];
    }
    EXPECT_EQ(sum, static_cast<int>(2 * g->edge_count()));

    std::vector<VertexSpec> specs = g->vertices();
    for (auto& s : specs) s.height = 2 * s.height + 1;
    ReebGraph relabeled(specs, std::vector<Edge>(g->edges().begin(), g->edges().end()));
    EXPECT_EQ(levels(relabeled).level, levels(*g).level);
    EXPECT_EQ(classify_shape(relabeled), classify_shape(*g));
  }
}

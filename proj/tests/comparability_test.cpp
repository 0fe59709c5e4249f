#include <gtest/gtest.h>

#include "test_support.hpp"

namespace polaritylab {
namespace {

using testing::set_of;

Orientation total_order(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) arcs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Orientation::make(complete_graph(n), arcs);
}

TEST(OrientationMake, RejectsBadArcLists) {
  Graph p3 = path_graph(3);
  EXPECT_THROW(Orientation::make(p3, {{0, 1}}), GraphError);                  // edge missing
  EXPECT_THROW(Orientation::make(p3, {{0, 1}, {1, 2}, {0, 2}}), GraphError);  // non-edge
  EXPECT_THROW(Orientation::make(p3, {{0, 1}, {1, 0}}), GraphError);          // both directions
  EXPECT_NO_THROW(Orientation::make(p3, {{1, 0}, {1, 2}}));
}

TEST(OrientationMake, ReversedAndAccessors) {
  Orientation o = Orientation::make(path_graph(3), {{0, 1}, {2, 1}});
  EXPECT_TRUE(o.points(0, 1));
  EXPECT_FALSE(o.points(1, 0));
  EXPECT_EQ(o.in(1), set_of(3, {0, 2}));
  Orientation r = o.reversed();
  EXPECT_EQ(r.arcs(), (std::vector<Arc>{{1, 0}, {1, 2}}));
  EXPECT_EQ(r.reversed(), o);
}

TEST(IsTransitive, TotalOrderOnK4) { EXPECT_TRUE(is_transitive(total_order(4))); }

TEST(IsTransitive, DirectedTriangle) {
  EXPECT_FALSE(is_transitive(Orientation::make(complete_graph(3), {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(IsTransitive, DirectedPathWithoutChord) {
  EXPECT_FALSE(is_transitive(Orientation::make(path_graph(3), {{0, 1}, {1, 2}})));
}

TEST(IsTransitive, QOrientation) {
  Graph q = build_q();
  auto v = [&](const char* name) { return testing::q(q, name); };
  Orientation o = Orientation::make(q, {{v("v3"), v("v1")},
                                        {v("v3"), v("v2")},
                                        {v("v4"), v("v1")},
                                        {v("v4"), v("v2")},
                                        {v("v1"), v("v2")},
                                        {v("v3"), v("u")},
                                        {v("v4"), v("u")}});
  EXPECT_TRUE(is_transitive(o));
  EXPECT_EQ(o, q_orientation(q));
}

TEST(FindOrientation, C5HasNone) { EXPECT_FALSE(find_transitive_orientation(cycle_graph(5)).has_value()); }

TEST(FindOrientation, BipartiteGraphs) {
  Rng rng(6);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 100; ++i) {
    GraphBuilder b(9);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 4; v < 9; ++v)
        if (coin(rng)) b.add_edge(u, v);
    Graph g = b.build();
    auto o = find_transitive_orientation(g);
    ASSERT_TRUE(o.has_value());
    EXPECT_TRUE(is_transitive(*o));
    EXPECT_EQ(o->graph(), g);
  }
}

TEST(FindOrientation, EvenCyclesYesOddCyclesNo) {
  for (std::size_t n = 4; n <= 11; ++n)
    EXPECT_EQ(is_comparability(cycle_graph(n)), n % 2 == 0) << "C" << n;
}

TEST(FindOrientation, RequiredSinks) {
  Graph p3 = path_graph(3);
  auto mid = find_transitive_orientation(p3, set_of(3, {1}));
  ASSERT_TRUE(mid.has_value());
  EXPECT_EQ(mid->arcs(), (std::vector<Arc>{{0, 1}, {2, 1}}));
  auto end = find_transitive_orientation(p3, set_of(3, {0}));
  ASSERT_TRUE(end.has_value());
  EXPECT_EQ(end->arcs(), (std::vector<Arc>{{1, 0}, {1, 2}}));
  // Two adjacent vertices cannot both be sinks.
  EXPECT_FALSE(find_transitive_orientation(p3, set_of(3, {0, 1})).has_value());
  EXPECT_FALSE(find_transitive_orientation(cycle_graph(5), VertexSet(5)).has_value());
}

TEST(FindOrientation, RequiredSinksAreSinks) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(7, 0.4, rng);
    VertexSet s(7);
    s.insert(static_cast<Vertex>(i % 7));
    auto o = find_transitive_orientation(g, s);
    if (!o) continue;
    EXPECT_TRUE(is_transitive(*o));
    EXPECT_TRUE(s.is_subset_of(sinks(*o)));
  }
}

TEST(IsComparability, Examples) {
  EXPECT_TRUE(is_comparability(complete_graph(4)));
  EXPECT_FALSE(is_comparability(cycle_graph(5)));
  EXPECT_TRUE(is_comparability(build_q()));
  EXPECT_TRUE(is_comparability(make_graph(0, {})));
}

TEST(IsComparability, DoubleIffSingleUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_graph(n, [](const Graph& g) { ASSERT_EQ(is_comparability(double_graph(g)), is_comparability(g)); });
}

TEST(IsComparability, AgreesWithOrientationOracleUpToFive) {
  std::size_t non_comparability = 0;
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      const bool expected = oracle::has_transitive_orientation(g);
      ASSERT_EQ(is_comparability(g), expected);
      if (!expected) ++non_comparability;
    });
  // At least the 12 labelled copies of C5 must be rejected.
  EXPECT_GE(non_comparability, 12u);
}

TEST(Oracle, SmallCases) {
  EXPECT_TRUE(oracle::has_transitive_orientation(complete_graph(5)));
  EXPECT_FALSE(oracle::has_transitive_orientation(cycle_graph(5)));
  EXPECT_TRUE(oracle::has_transitive_orientation(cycle_graph(6)));
  EXPECT_FALSE(oracle::has_transitive_orientation(cycle_graph(7)));
  EXPECT_THROW(oracle::has_transitive_orientation(complete_graph(7)), CapacityError);
}

TEST(Is3ColComparability, Examples) {
  EXPECT_FALSE(is_3col_comparability(complete_graph(4)));
  EXPECT_FALSE(is_3col_comparability(cycle_graph(5)));
  EXPECT_TRUE(is_3col_comparability(build_q()));
  EXPECT_TRUE(is_3col_comparability(cycle_graph(6)));
}

TEST(ChainColoring, TotalOrderOnK4) {
  EXPECT_EQ(chain_coloring(total_order(4)).colors, (std::vector<int>{0, 1, 2, 3}));
}

TEST(ChainColoring, Edgeless) {
  Coloring c = chain_coloring(Orientation::make(make_graph(4, {}), {}));
  EXPECT_EQ(c.colors, (std::vector<int>(4, 0)));
  EXPECT_EQ(c.num_colors(), 1);
}

TEST(ChainColoring, RejectsNonTransitive) {
  EXPECT_THROW(chain_coloring(Orientation::make(path_graph(3), {{0, 1}, {1, 2}})), PreconditionError);
}

TEST(ChainColoring, ColourCountIsCliqueNumber) {
  auto check = [](const Graph& g) {
    auto o = find_transitive_orientation(g);
    if (!o) return;
    Coloring c = chain_coloring(*o);
    ASSERT_TRUE(c.is_proper(g));
    ASSERT_EQ(static_cast<std::size_t>(c.num_colors()), clique_number(g));
  };
  for (std::size_t n = 1; n <= 6; ++n) for_each_graph(n, check);
  Rng rng(10);
  for (int i = 0; i < 300; ++i) check(random_graph(8, (i % 4 + 1) * 0.2, rng));
}

TEST(Sinks, Examples) {
  EXPECT_EQ(sinks(total_order(3)), set_of(3, {2}));
  Graph star = make_graph(4, {{0, 3}, {1, 3}, {2, 3}});
  EXPECT_EQ(sinks(Orientation::make(star, {{0, 3}, {1, 3}, {2, 3}})), set_of(4, {3}));
  EXPECT_EQ(sinks(Orientation::make(make_graph(2, {}), {})), set_of(2, {0, 1}));
}

TEST(OrientationIo, WriteFormat) {
  Orientation o = Orientation::make(path_graph(3), {{2, 1}, {0, 1}});
  EXPECT_EQ(write_orientation(o), "p orient 3 2\na 1 2\na 3 2\n");
}

TEST(OrientationIo, RoundTrip) {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(8, 0.4, rng);
    auto o = find_transitive_orientation(g);
    if (!o) continue;
    EXPECT_EQ(read_orientation(write_orientation(*o), g), *o);
  }
}

TEST(OrientationIo, Errors) {
  Graph p3 = path_graph(3);
  EXPECT_THROW(read_orientation("p orient 3 2\na 1 2\n", p3), ParseError);
  EXPECT_THROW(read_orientation("p orient 3 1\na 1 4\n", p3), ParseError);
  EXPECT_THROW(read_orientation("p edge 3 2\na 1 2\na 3 2\n", p3), ParseError);
  EXPECT_THROW(read_orientation("p orient 3 2\na 1 2\na 1 3\n", p3), GraphError);
  EXPECT_THROW(read_orientation("p orient 4 2\na 1 2\na 3 2\n", p3), GraphError);
}

}  // namespace
}  // namespace polaritylab

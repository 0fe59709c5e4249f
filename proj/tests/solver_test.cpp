#include <gtest/gtest.h>

#include <cstdlib>

#include "test_support.hpp"

namespace polaritylab {
namespace {

using testing::set_of;

constexpr PartitionKind all_kinds[] = {PartitionKind::monopolar, PartitionKind::polar, PartitionKind::unipolar};

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

Graph k4_with_pendant() { return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

TEST(SolveMonopolar, BipartiteGraphs) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    // Random bipartite graph between {0..4} and {5..9}.
    std::bernoulli_distribution coin(0.5);
    GraphBuilder b(10);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = 5; v < 10; ++v)
        if (coin(rng)) b.add_edge(u, v);
    Graph g = b.build();
    auto p = solve_monopolar(g);
    ASSERT_TRUE(p.has_value());
    EXPECT_TRUE(validate(g, *p));
    // One colour class left, the other right, is always valid.
    EXPECT_TRUE(validate(g, Partition::from_left(PartitionKind::monopolar, set_of(10, {0, 1, 2, 3, 4}))));
  }
}

TEST(SolveMonopolar, QHasTheClaimPartition) {
  auto p = solve_monopolar(build_q());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, q_partition());
}

TEST(SolveMonopolar, C5) {
  Graph c5 = cycle_graph(5);
  auto p = solve_monopolar(c5);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(validate(c5, *p));
  // Lexicographically least by hand: {} leaves C5, {0} leaves the path 1-2-3-4,
  // {0,1} is an edge, {0,2} leaves {1,3,4} with the single edge 3-4.
  EXPECT_EQ(brute_monopolar(c5)->a_side, set_of(5, {0, 2}));
}

TEST(SolveMonopolar, EmptyGraph) {
  auto p = solve_monopolar(make_graph(0, {}));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(p->a_side.empty());
  EXPECT_TRUE(p->b_side.empty());
}

TEST(SolveMonopolar, NoPartitionExample) {
  // The complement of C7 has no monopolar partition (checked by the oracle).
  Graph g = complement(cycle_graph(7));
  EXPECT_FALSE(brute_monopolar(g).has_value());
  EXPECT_FALSE(solve_monopolar(g).has_value());
}

TEST(SolvePolar, K4) {
  auto p = solve_polar(complete_graph(4));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(validate(complete_graph(4), *p));
  EXPECT_TRUE(validate(complete_graph(4), Partition::from_left(PartitionKind::polar, complete_graph(4).vertices())));
}

TEST(SolvePolar, DoubleIffMonopolarUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_graph(n, [](const Graph& g) {
      ASSERT_EQ(solve_polar(double_graph(g)).has_value(), solve_monopolar(g).has_value());
    });
}

TEST(SolvePolar, ComplementInvarianceUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_graph(n, [](const Graph& g) {
      ASSERT_EQ(solve_polar(g).has_value(), solve_polar(complement(g)).has_value());
    });
}

TEST(SolvePolar, ComplementOfPartitionSwapsBlocks) {
  // (A,B) polar for g means (B,A) polar for the complement.
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(9, 0.5, rng);
    auto p = solve_polar(g);
    if (!p) continue;
    EXPECT_TRUE(validate(complement(g), Partition::from_left(PartitionKind::polar, p->b_side)));
  }
}

TEST(SolveUnipolar, ClusterGraphs) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const auto& sizes : integer_partitions(n)) {
      Graph g = cluster_graph(sizes);
      EXPECT_TRUE(solve_unipolar(g).has_value());
      EXPECT_TRUE(validate(g, Partition::from_left(PartitionKind::unipolar, VertexSet(n))));
      EXPECT_TRUE(brute_unipolar(g)->a_side.empty());
    }
}

TEST(SolveUnipolar, C5HasNone) {
  EXPECT_FALSE(solve_unipolar(cycle_graph(5)).has_value());
  EXPECT_FALSE(brute_unipolar(cycle_graph(5)).has_value());
}

TEST(SolveUnipolar, K4WithPendant) {
  Graph g = k4_with_pendant();
  auto p = solve_unipolar(g);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(validate(g, *p));
  EXPECT_TRUE(validate(g, Partition::from_left(PartitionKind::unipolar, set_of(5, {0}))));
}

TEST(SolveUnipolar, CapacityBound) {
  EXPECT_THROW(solve_unipolar(make_graph(21, {})), CapacityError);
  EXPECT_NO_THROW(solve_unipolar(make_graph(21, {}), SolverLimits{21}));
  EXPECT_THROW(solve(make_graph(21, {}), PartitionKind::unipolar), CapacityError);
}

TEST(Solve, DispatchesByKind) {
  Graph g = k4_with_pendant();
  for (auto kind : all_kinds) {
    auto p = solve(g, kind);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->kind, kind);
    EXPECT_TRUE(validate(g, *p));
  }
}

TEST(Brute, EmptyGraph) {
  for (auto kind : all_kinds) {
    auto p = brute_solve(make_graph(0, {}), kind);
    ASSERT_TRUE(p.has_value());
    EXPECT_TRUE(p->a_side.empty());
    EXPECT_TRUE(p->b_side.empty());
  }
}

TEST(Brute, QHasTheClaimPartition) { EXPECT_EQ(brute_monopolar(build_q()), q_partition()); }

TEST(Brute, LexicographicallyLeast) {
  // P3 monopolar: {} fails (P3 is not a cluster), {0} works.
  EXPECT_EQ(brute_monopolar(path_graph(3))->a_side, set_of(3, {0}));
  // Unipolar on the path 0-1-2-3: {} and {0} leave an induced P3 on the
  // right; {0,1} is an edge and leaves the edge 2-3.
  EXPECT_EQ(brute_unipolar(path_graph(4))->a_side, set_of(4, {0, 1}));
}

TEST(Enumerate, Q) {
  auto all = enumerate_monopolar(build_q());
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], q_partition());
}

TEST(Enumerate, K2) {
  auto all = enumerate_monopolar(complete_graph(2));
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].a_side, VertexSet(2));
  EXPECT_EQ(all[1].a_side, set_of(2, {0}));
  EXPECT_EQ(all[2].a_side, set_of(2, {1}));
  EXPECT_EQ(all[1].b_side, set_of(2, {1}));
}

TEST(Enumerate, SearchMatchesExhaustiveScanForEveryKind) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_graph(n, [](const Graph& g) {
      for (auto kind : all_kinds) ASSERT_EQ(search_all_partitions(g, kind), brute::all(g, kind));
    });
}

TEST(Enumerate, NonEmptyIffSolvable) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(4 + static_cast<std::size_t>(i % 8), 0.5, rng);
    EXPECT_EQ(!enumerate_monopolar(g).empty(), solve_monopolar(g).has_value());
  }
}

TEST(CountPartitions, StopsAtLimit) {
  Graph edgeless = make_graph(6, {});
  EXPECT_EQ(count_partitions(edgeless, PartitionKind::monopolar, 1000), 64u);
  EXPECT_EQ(count_partitions(edgeless, PartitionKind::monopolar, 5), 5u);
  EXPECT_EQ(count_partitions(build_q(), PartitionKind::monopolar, 5), 1u);
}

TEST(Properties, SoundnessOnRandomGraphs) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(5 + static_cast<std::size_t>(i % 12), (i % 3 + 1) * 0.25, rng);
    for (auto kind : all_kinds) {
      auto p = solve(g, kind);
      if (p) {
        EXPECT_EQ(p->kind, kind);
        EXPECT_TRUE(validate(g, *p));
      }
    }
  }
}

TEST(Properties, MonopolarImpliesDoubleMonopolar) {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_graph(3 + static_cast<std::size_t>(i % 8), 0.5, rng);
    if (solve_monopolar(g)) {
      EXPECT_TRUE(solve_monopolar(double_graph(g)).has_value());
    }
  }
}

TEST(Capacity, DefaultBound) {
  EXPECT_EQ(max_brute_vertices(), 22u);
  EXPECT_THROW(brute_monopolar(make_graph(23, {})), CapacityError);
  EXPECT_THROW(enumerate_monopolar(make_graph(23, {})), CapacityError);
}

TEST(Capacity, EnvironmentOverride) {
  {
    ScopedEnv env("POLARITYLAB_MAX_BRUTE", "4");
    EXPECT_EQ(max_brute_vertices(), 4u);
    EXPECT_THROW(brute_polar(make_graph(5, {})), CapacityError);
    EXPECT_NO_THROW(brute_polar(make_graph(4, {})));
  }
  {
    ScopedEnv env("POLARITYLAB_MAX_BRUTE", "many");
    EXPECT_THROW(max_brute_vertices(), CapacityError);
  }
  {
    ScopedEnv env("POLARITYLAB_MAX_BRUTE", "0");
    EXPECT_THROW(max_brute_vertices(), CapacityError);
  }
}

}  // namespace
}  // namespace polaritylab

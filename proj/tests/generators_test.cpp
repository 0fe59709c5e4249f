#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace polaritylab {
namespace {

TEST(ForEachGraph, CountsAndDistinctness) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::string> seen;
    for_each_graph(n, [&](const Graph& g) { seen.insert(write_dimacs_graph(g)); });
    EXPECT_EQ(seen.size(), std::size_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2)) << n;
  }
  EXPECT_THROW(for_each_graph(9, [](const Graph&) {}), CapacityError);
}

TEST(RandomGraph, DeterministicForSeed) {
  Rng a(5), b(5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_graph(10, 0.5, a), random_graph(10, 0.5, b));
}

TEST(RandomGraph, ExtremeProbabilities) {
  Rng rng(1);
  EXPECT_EQ(random_graph(6, 0.0, rng).edge_count(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, rng), complete_graph(6));
}

TEST(IntegerPartitions, Counts) {
  // p(n) for n = 0..8.
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(integer_partitions(n).size(), expected[n]) << n;
  EXPECT_EQ(integer_partitions(4), (std::vector<std::vector<std::size_t>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(ClusterGraph, Shape) {
  Graph g = cluster_graph({3, 2, 1});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(is_cluster(g));
  EXPECT_EQ(connected_components(g).size(), 3u);
}

TEST(Formulas, ExhaustiveCounts) {
  EXPECT_EQ(all_clauses(4).size(), 4u);
  std::size_t count = 0;
  for_each_formula(4, 3, [&](const Formula&) { ++count; });
  EXPECT_EQ(count, 64u);
  count = 0;
  for_each_formula(2, 1, [&](const Formula&) { ++count; });
  EXPECT_EQ(count, 0u);
  count = 0;
  for_each_formula(2, 0, [&](const Formula& f) {
    ++count;
    EXPECT_TRUE(f.clauses.empty());
  });
  EXPECT_EQ(count, 1u);
}

TEST(Formulas, RandomAreWellFormedAndUseEveryPosition) {
  Rng rng(3);
  std::set<std::pair<std::size_t, int>> position_values;
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(5, 4, rng);
    EXPECT_NO_THROW(Formula::make(f.num_vars, f.clauses));
    for (const auto& c : f.clauses)
      for (std::size_t j = 0; j < 3; ++j) position_values.insert({j, c[j]});
  }
  EXPECT_EQ(position_values.size(), 15u);
  EXPECT_THROW(random_formula(2, 1, rng), PreconditionError);
}

}  // namespace
}  // namespace polaritylab

#pragma once

// The nine acceptance criteria as callable checks. Each returns one Result;
// a criterion passes when it has no failing case and stays within its time
// limit (when it has one).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polaritylab/brute.hpp"
#include "polaritylab/comparability.hpp"
#include "polaritylab/formula.hpp"
#include "polaritylab/gadget.hpp"
#include "polaritylab/generators.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/oracles.hpp"
#include "polaritylab/partition.hpp"
#include "polaritylab/reduction.hpp"
#include "polaritylab/solver.hpp"

namespace polaritylab::acceptance {

struct Config {
  std::size_t max_n = 6;                 // exhaustive graph range 0..max_n
  std::size_t random_graphs = 500;
  std::size_t random_min_n = 7;
  std::size_t random_max_n = 12;
  std::vector<double> edge_probabilities = {0.2, 0.5, 0.8};
  std::size_t formula_max_n = 4;         // exhaustive formula range
  std::size_t formula_max_m = 3;
  std::size_t random_formulas = 200;
  std::size_t random_formula_max_n = 6;
  std::size_t random_formula_max_m = 5;
  std::size_t transform_random = 200;
  std::size_t transform_max_n = 10;
  std::size_t cluster_max_n = 8;
  std::uint64_t seed = 1;
};

using SolverFn = std::function<std::optional<Partition>(const Graph&)>;

/// The solvers under test; replaceable so a deliberately broken solver can
/// show that the suite notices.
struct SolverSuite {
  SolverFn monopolar = [](const Graph& g) { return solve_monopolar(g); };
  SolverFn polar = [](const Graph& g) { return solve_polar(g); };
  SolverFn unipolar = [](const Graph& g) { return solve_unipolar(g); };
};

struct Result {
  int id = 0;
  std::string title;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::optional<double> limit_seconds;
  std::string detail;  // first failure, if any

  bool within_limit() const { return !limit_seconds || seconds < *limit_seconds; }
  bool passed() const { return failures == 0 && cases > 0 && within_limit(); }
};

inline std::string format(const Result& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " | cases=" << r.cases
      << " failures=" << r.failures << " time=" << std::fixed << std::setprecision(4) << r.seconds << "s";
  if (r.limit_seconds) out << " limit=" << std::defaultfloat << *r.limit_seconds << "s";
  if (!r.detail.empty()) out << " | " << r.detail;
  return out.str();
}

namespace detail {

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void fail(Result& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

inline std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges={";
  for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
  out << " }";
  return out.str();
}

/// Every graph on 0..max_n vertices, then the seeded random graphs.
template <typename Visit>
void graph_corpus(const Config& c, Visit&& visit) {
  for (std::size_t n = 0; n <= c.max_n; ++n) for_each_graph(n, visit);
  Rng rng(c.seed);
  std::uniform_int_distribution<std::size_t> order(c.random_min_n, c.random_max_n);
  for (std::size_t i = 0; i < c.random_graphs; ++i) {
    const double p = c.edge_probabilities[i % c.edge_probabilities.size()];
    const std::size_t n = order(rng);
    visit(random_graph(n, p, rng));
  }
}

/// Every formula with n <= formula_max_n and m <= formula_max_m, then the
/// seeded random formulas with 3 <= n <= random_formula_max_n and
/// 1 <= m <= random_formula_max_m.
template <typename Visit>
void formula_corpus(const Config& c, Visit&& visit) {
  for (std::size_t n = 0; n <= c.formula_max_n; ++n)
    for (std::size_t m = 0; m <= c.formula_max_m; ++m) for_each_formula(n, m, visit);
  Rng rng(c.seed + 1);
  std::uniform_int_distribution<std::size_t> vars(3, c.random_formula_max_n);
  std::uniform_int_distribution<std::size_t> clauses(1, c.random_formula_max_m);
  for (std::size_t i = 0; i < c.random_formulas; ++i) {
    const std::size_t n = vars(rng);
    const std::size_t m = clauses(rng);
    visit(random_formula(n, m, rng));
  }
}

}  // namespace detail

/// Q has exactly one monopolar partition, found by scanning all 32 subsets.
inline Result criterion_1() {
  Result r{1, "Q has exactly one monopolar partition ({v3,v4},{v1,v2,u})", 0, 0, 0, 0.001, ""};
  detail::Timer t;
  Graph q = build_q();
  const bool verified = verify_q(q);
  const auto all = enumerate_monopolar(q);
  r.seconds = t.seconds();
  r.cases = 1;
  if (!verified) detail::fail(r, "verify_q rejected build_q()");
  if (all.size() != 1 || !(all[0] == q_partition()))
    detail::fail(r, "enumeration found " + std::to_string(all.size()) + " partitions");
  return r;
}

/// The synthesized gadget has exactly three monopolar partitions with
/// distinct right terminals and the hub always right; it is K4-free and has
/// a transitive orientation in which every terminal is a sink. The time limit
/// applies to the exhaustive verification.
inline Result criterion_2() {
  Result r{2, "synthesized clause gadget satisfies the three-partition contract", 0, 0, 0, 10.0, ""};
  const ClauseGadget gadget = synthesize_clause_gadget(18, 0);
  detail::Timer t;
  const auto check = check_clause_gadget(gadget);
  const auto partitions = enumerate_monopolar(gadget.graph);
  r.seconds = t.seconds();
  r.cases = 1;
  r.title += " (n=" + std::to_string(gadget.graph.order()) + ")";
  if (!check.ok()) detail::fail(r, check.violation->what());
  if (partitions.size() != 3) detail::fail(r, std::to_string(partitions.size()) + " monopolar partitions");
  std::vector<int> right_terminals;
  for (const auto& p : partitions) {
    if (!p.is_right(gadget.hub)) detail::fail(r, "hub is left in some partition");
    int right = 0;
    for (int j = 0; j < 3; ++j)
      if (p.is_right(gadget.terminals[static_cast<std::size_t>(j)])) {
        ++right;
        right_terminals.push_back(j);
      }
    if (right != 1) detail::fail(r, "a partition has " + std::to_string(right) + " right terminals");
  }
  std::sort(right_terminals.begin(), right_terminals.end());
  if (right_terminals != std::vector<int>{0, 1, 2}) detail::fail(r, "right terminals are not distinct");
  if (has_k4(gadget.graph)) detail::fail(r, "gadget contains K4");
  if (!is_transitive(gadget.orientation)) detail::fail(r, "orientation is not transitive");
  const VertexSet s = sinks(gadget.orientation);
  for (Vertex t3 : gadget.terminals)
    if (!s.contains(t3)) detail::fail(r, "a terminal is not a sink");
  return r;
}

/// Solvers agree with the exhaustive oracles on existence, and every returned
/// partition validates.
inline Result criterion_3(const Config& c, const SolverSuite& s = {}) {
  Result r{3, "solvers agree with brute-force oracles (monopolar, polar, unipolar)", 0, 0, 0, 300.0, ""};
  detail::Timer t;
  const std::pair<PartitionKind, const SolverFn*> kinds[] = {
      {PartitionKind::monopolar, &s.monopolar}, {PartitionKind::polar, &s.polar}, {PartitionKind::unipolar, &s.unipolar}};
  detail::graph_corpus(c, [&](const Graph& g) {
    ++r.cases;
    for (auto [kind, solver] : kinds) {
      const auto found = (*solver)(g);
      const auto expected = brute_solve(g, kind);
      if (found.has_value() != expected.has_value()) {
        detail::fail(r, std::string(to_string(kind)) + " disagrees on " + detail::describe(g));
      } else if (found && (found->kind != kind || !validate(g, *found))) {
        detail::fail(r, std::string(to_string(kind)) + " returned an invalid partition on " + detail::describe(g));
      }
    }
  });
  r.seconds = t.seconds();
  return r;
}

/// A formula has a 1-in-3 assignment iff its reduction graph is monopolar;
/// partitions found by the solver decode to 1-in-3 assignments, and
/// encoding then decoding an assignment returns it.
inline Result criterion_4(const Config& c, const SolverSuite& s = {}) {
  Result r{4, "formula is 1-in-3 satisfiable iff its reduction graph is monopolar", 0, 0, 0, 600.0, ""};
  detail::Timer t;
  const auto& gadget = default_clause_gadget();
  detail::formula_corpus(c, [&](const Formula& f) {
    ++r.cases;
    const auto name = [&] { return "formula " + write_formula(f); };
    try {
      const auto red = build_reduction(f, gadget);
      const auto truth = brute_force_1in3(f);
      const auto found = s.monopolar(red.graph);
      if (truth.has_value() != found.has_value()) return detail::fail(r, "disagreement on " + name());
      if (found) {
        const auto a = partition_to_assignment(red, *found);
        if (!check_1in3(f, a)) return detail::fail(r, "decoded assignment is not 1-in-3 on " + name());
        if (!(partition_to_assignment(red, assignment_to_partition(red, *truth)) == *truth))
          return detail::fail(r, "round trip changed the assignment on " + name());
      }
    } catch (const Error& e) {
      detail::fail(r, std::string(e.what()) + " on " + name());
    }
  });
  r.seconds = t.seconds();
  return r;
}

/// Every reduction graph is a K4-free comparability graph and the chain
/// colouring of its constructed orientation uses exactly three colours.
inline Result criterion_5(const Config& c) {
  Result r{5, "reduction graphs are 3-colourable comparability graphs with chi = 3", 0, 0, 0, std::nullopt, ""};
  detail::Timer t;
  const auto& gadget = default_clause_gadget();
  detail::formula_corpus(c, [&](const Formula& f) {
    ++r.cases;
    const auto red = build_reduction(f, gadget);
    if (!is_3col_comparability(red.graph)) return detail::fail(r, "not a 3-colourable comparability graph: " + write_formula(f));
    if (f.clauses.empty()) return;
    const Orientation o = reduction_orientation(red);
    if (!is_transitive(o)) return detail::fail(r, "constructed orientation not transitive: " + write_formula(f));
    const Coloring col = chain_coloring(o);
    if (!col.is_proper(red.graph) || col.num_colors() != 3)
      detail::fail(r, "chain colouring uses " + std::to_string(col.num_colors()) + " colours: " + write_formula(f));
  });
  r.seconds = t.seconds();
  return r;
}

/// double(g) polar <=> g monopolar <=> double(g) monopolar.
inline Result criterion_6(const Config& c, const SolverSuite& s = {}) {
  Result r{6, "double(g) polar <=> g monopolar <=> double(g) monopolar", 0, 0, 0, std::nullopt, ""};
  detail::Timer t;
  auto check = [&](const Graph& g) {
    ++r.cases;
    const Graph d = double_graph(g);
    const bool mono = s.monopolar(g).has_value();
    const bool double_polar = s.polar(d).has_value();
    const bool double_mono = s.monopolar(d).has_value();
    if (mono != double_polar || mono != double_mono) detail::fail(r, "disagreement on " + detail::describe(g));
  };
  for (std::size_t n = 0; n <= c.max_n; ++n) for_each_graph(n, check);
  Rng rng(c.seed + 2);
  std::uniform_int_distribution<std::size_t> order(c.random_min_n, c.transform_max_n);
  for (std::size_t i = 0; i < c.transform_random; ++i) {
    const double p = c.edge_probabilities[i % c.edge_probabilities.size()];
    const std::size_t n = order(rng);
    check(random_graph(n, p, rng));
  }
  r.seconds = t.seconds();
  return r;
}

/// The complement of every cluster graph on at most cluster_max_n vertices
/// is connected or edgeless.
inline Result criterion_7(const Config& c) {
  Result r{7, "complement of every cluster graph is connected or edgeless", 0, 0, 0, std::nullopt, ""};
  detail::Timer t;
  for (std::size_t n = 0; n <= c.cluster_max_n; ++n)
    for (const auto& sizes : integer_partitions(n)) {
      ++r.cases;
      const Graph h = complement(cluster_graph(sizes));
      if (!is_co_cluster(h)) {
        detail::fail(r, "complement of a cluster graph is not a co-cluster");
        continue;
      }
      const bool ok = h.edge_count() == 0 || connected_components(h).size() == 1;
      if (!ok || !co_cluster_connectivity_check(h)) detail::fail(r, "disconnected co-cluster " + detail::describe(h));
    }
  r.seconds = t.seconds();
  return r;
}

/// g is polar iff its complement is, over criterion 3's corpus.
inline Result criterion_8(const Config& c, const SolverSuite& s = {}) {
  Result r{8, "g polar <=> complement(g) polar", 0, 0, 0, std::nullopt, ""};
  detail::Timer t;
  detail::graph_corpus(c, [&](const Graph& g) {
    ++r.cases;
    if (s.polar(g).has_value() != s.polar(complement(g)).has_value()) detail::fail(r, "disagreement on " + detail::describe(g));
  });
  r.seconds = t.seconds();
  return r;
}

/// is_comparability agrees with the edge-direction search on every graph
/// with at most max_n vertices (and at most 15 edges).
inline Result criterion_9(const Config& c) {
  Result r{9, "comparability recognition agrees with exhaustive orientation search", 0, 0, 0, std::nullopt, ""};
  detail::Timer t;
  for (std::size_t n = 0; n <= c.max_n; ++n)
    for_each_graph(n, [&](const Graph& g) {
      if (g.edge_count() > 15) return;
      ++r.cases;
      if (is_comparability(g) != oracle::has_transitive_orientation(g)) detail::fail(r, "disagreement on " + detail::describe(g));
    });
  r.seconds = t.seconds();
  return r;
}

/// Runs criteria 1..9 in order, calling report after each.
inline std::vector<Result> run_all(const Config& c, const SolverSuite& s = {},
                                   const std::function<void(const Result&)>& report = {}) {
  std::vector<std::function<Result()>> steps = {
      [] { return criterion_1(); },       [] { return criterion_2(); },      [&] { return criterion_3(c, s); },
      [&] { return criterion_4(c, s); },  [&] { return criterion_5(c); },    [&] { return criterion_6(c, s); },
      [&] { return criterion_7(c); },     [&] { return criterion_8(c, s); }, [&] { return criterion_9(c); },
  };
  std::vector<Result> out;
  for (auto& step : steps) {
    Result r;
    try {
      r = step();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.title = "aborted";
      detail::fail(r, e.what());
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polaritylab::acceptance

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/formula.hpp"
#include "polaritylab/graph.hpp"

namespace polaritylab {

using Rng = std::mt19937_64;

/// All 2^(n(n-1)/2) labelled graphs on n vertices. Graph number k contains the
/// i-th pair of the lexicographic pair order iff bit i of k is set.
template <typename Visit>
void for_each_graph(std::size_t n, Visit&& visit) {
  if (n > 8) throw CapacityError("exhaustive graph enumeration is limited to 8 vertices");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t code = 0; code < count; ++code) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((code >> i) & 1u) edges.push_back(pairs[i]);
    visit(make_graph(n, edges));
  }
}

/// G(n, p): each pair independently present with probability p.
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return b.build();
}

/// Partitions of n into non-increasing positive parts, in reverse
/// lexicographic order ({n} first).
inline std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t rest, std::size_t max_part) -> void {
    if (rest == 0) {
      out.push_back(parts);
      return;
    }
    for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, rest - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Disjoint union of cliques with the given sizes, on consecutive vertices.
inline Graph cluster_graph(const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  GraphBuilder b(n);
  std::size_t start = 0;
  for (auto s : sizes) {
    for (std::size_t u = start; u < start + s; ++u)
      for (std::size_t v = u + 1; v < start + s; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    start += s;
  }
  return b.build();
}

/// Increasing triples over variables 1..n in lexicographic order.
inline std::vector<Clause> all_clauses(std::size_t n) {
  std::vector<Clause> out;
  const int k = static_cast<int>(n);
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b)
      for (int c = b + 1; c <= k; ++c) out.push_back({a, b, c});
  return out;
}

/// Every formula with exactly n variables and m clauses, where each clause is
/// an increasing triple and clause order matters: |all_clauses(n)|^m formulas.
template <typename Visit>
void for_each_formula(std::size_t n, std::size_t m, Visit&& visit) {
  const auto clauses = all_clauses(n);
  if (m > 0 && clauses.empty()) return;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::vector<Clause> cs;
    for (auto i : idx) cs.push_back(clauses[i]);
    visit(Formula::make(n, cs));
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == clauses.size()) idx[pos++] = 0;
    if (pos == m) return;
  }
}

/// m clauses of three distinct variables drawn uniformly from 1..n, each in a
/// random order so every terminal position gets used. Requires n >= 3 when m > 0.
inline Formula random_formula(std::size_t n, std::size_t m, Rng& rng) {
  if (m > 0 && n < 3) throw PreconditionError("random clauses need at least 3 variables");
  std::vector<int> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<int>(i + 1);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, n - 1);
      std::swap(vars[j], vars[pick(rng)]);
    }
    clauses.push_back({vars[0], vars[1], vars[2]});
  }
  return Formula::make(n, clauses);
}

}  // namespace polaritylab

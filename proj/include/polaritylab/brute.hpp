#pragma once

// Exhaustive oracles over all 2^n choices of the left block. They share no
// code with the backtracking search in solver.hpp.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/partition.hpp"

namespace polaritylab {

inline constexpr std::size_t default_max_brute = 22;

/// Vertex cap for exhaustive scans; POLARITYLAB_MAX_BRUTE overrides it.
inline std::size_t max_brute_vertices() {
  const char* env = std::getenv("POLARITYLAB_MAX_BRUTE");
  if (env == nullptr || *env == '\0') return default_max_brute;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 40)
    throw CapacityError(std::string("POLARITYLAB_MAX_BRUTE must be an integer in 1..40, got '") + env + "'");
  return static_cast<std::size_t>(value);
}

namespace brute {

using Mask = std::uint64_t;

struct MaskGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::vector<Mask> co_adj;  // adjacency of the complement

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0), co_adj(g.order(), 0) {
    for (auto [u, v] : g.edges()) {
      adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    for (std::size_t v = 0; v < n; ++v) co_adj[v] = ~adj[v] & ~(Mask{1} << v) & all();
  }

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

inline bool independent(const MaskGraph& g, Mask s) {
  for (Mask w = s; w; w &= w - 1)
    if (g.adj[static_cast<std::size_t>(std::countr_zero(w))] & s) return false;
  return true;
}

inline bool clique(const MaskGraph& g, Mask s) {
  for (Mask w = s; w; w &= w - 1) {
    auto v = std::countr_zero(w);
    if ((s & ~(Mask{1} << v)) & ~g.adj[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

// Every vertex of s and each of its neighbours in s see the same closed
// neighbourhood inside s.
inline bool cluster_with(const std::vector<Mask>& adj, Mask s) {
  for (Mask w = s; w; w &= w - 1) {
    auto v = std::countr_zero(w);
    const Mask closed_v = (adj[static_cast<std::size_t>(v)] | (Mask{1} << v)) & s;
    for (Mask x = adj[static_cast<std::size_t>(v)] & s; x; x &= x - 1) {
      auto u = std::countr_zero(x);
      if (((adj[static_cast<std::size_t>(u)] | (Mask{1} << u)) & s) != closed_v) return false;
    }
  }
  return true;
}

inline bool cluster(const MaskGraph& g, Mask s) { return cluster_with(g.adj, s); }

inline bool co_cluster(const MaskGraph& g, Mask s) { return cluster_with(g.co_adj, s); }

inline bool valid(const MaskGraph& g, PartitionKind kind, Mask left) {
  const Mask right = g.all() & ~left;
  bool left_ok = false;
  switch (kind) {
    case PartitionKind::monopolar: left_ok = independent(g, left); break;
    case PartitionKind::unipolar: left_ok = clique(g, left); break;
    case PartitionKind::polar: left_ok = co_cluster(g, left); break;
  }
  return left_ok && cluster(g, right);
}

/// Lexicographic order on sorted member lists.
inline bool mask_less(Mask a, Mask b) {
  while (a && b) {
    auto x = std::countr_zero(a);
    auto y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline void check_capacity(const Graph& g) {
  const auto cap = max_brute_vertices();
  if (g.order() > cap)
    throw CapacityError("exhaustive scan is limited to " + std::to_string(cap) + " vertices, graph has " +
                        std::to_string(g.order()));
}

inline Partition to_partition(std::size_t n, PartitionKind kind, Mask left) {
  VertexSet a(n);
  for (Mask w = left; w; w &= w - 1) a.insert(std::countr_zero(w));
  return Partition::from_left(kind, a);
}

inline std::optional<Partition> least(const Graph& g, PartitionKind kind) {
  check_capacity(g);
  MaskGraph mg(g);
  std::optional<Mask> best;
  for (Mask left = 0;; ++left) {
    if (valid(mg, kind, left) && (!best || mask_less(left, *best))) best = left;
    if (left == mg.all()) break;
  }
  if (!best) return std::nullopt;
  return to_partition(g.order(), kind, *best);
}

inline std::vector<Partition> all(const Graph& g, PartitionKind kind) {
  check_capacity(g);
  MaskGraph mg(g);
  std::vector<Mask> found;
  const Mask limit = mg.all();
  for (Mask left = 0;; ++left) {
    if (valid(mg, kind, left)) found.push_back(left);
    if (left == limit) break;
  }
  std::sort(found.begin(), found.end(), mask_less);
  std::vector<Partition> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(to_partition(g.order(), kind, m));
  return out;
}

}  // namespace brute

/// Lexicographically least monopolar partition by exhaustive scan.
inline std::optional<Partition> brute_monopolar(const Graph& g) { return brute::least(g, PartitionKind::monopolar); }
inline std::optional<Partition> brute_polar(const Graph& g) { return brute::least(g, PartitionKind::polar); }
inline std::optional<Partition> brute_unipolar(const Graph& g) { return brute::least(g, PartitionKind::unipolar); }

inline std::optional<Partition> brute_solve(const Graph& g, PartitionKind kind) { return brute::least(g, kind); }

/// Every monopolar partition, sorted by A-membership, by exhaustive scan.
inline std::vector<Partition> enumerate_monopolar(const Graph& g) { return brute::all(g, PartitionKind::monopolar); }

}  // namespace polaritylab

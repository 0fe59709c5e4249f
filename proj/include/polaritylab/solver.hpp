#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/partition.hpp"

namespace polaritylab {

struct SolverLimits {
  std::size_t unipolar_max_n = 20;
};

namespace detail {

/// Backtracking over vertex sides with propagation to a fixpoint.
///
/// B must stay a union of disjoint cliques: two adjacent right vertices need
/// identical closed neighbourhoods inside B. The left block follows the kind:
/// independent (monopolar), clique (unipolar), or co-cluster (polar), where
/// two non-adjacent left vertices need identical open neighbourhoods inside A.
/// Each forbidden configuration has at most three vertices and is checked when
/// its last vertex is placed, so every leaf is a valid partition.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, PartitionKind kind) : g_(g), kind_(kind) {}

  /// Calls visit(left_set) for each partition in search order until it
  /// returns false. Branches on the lowest undecided vertex, left first.
  template <typename Visit>
  void run(Visit&& visit) const {
    State s{std::vector<Side>(g_.order(), Side::undecided), VertexSet(g_.order()), VertexSet(g_.order())};
    search(s, visit);
  }

 private:
  enum class Side : std::uint8_t { undecided, left, right };

  struct State {
    std::vector<Side> side;
    VertexSet a;
    VertexSet b;
  };

  // ((x ^ y) & within) has no member other than `except`.
  static bool agree_within(const VertexSet& x, const VertexSet& y, const VertexSet& within, Vertex except) {
    const auto& xw = x.words();
    const auto& yw = y.words();
    const auto& ww = within.words();
    for (std::size_t i = 0; i < xw.size(); ++i) {
      std::uint64_t d = (xw[i] ^ yw[i]) & ww[i];
      if (except >= 0 && static_cast<std::size_t>(except >> 6) == i) d &= ~(std::uint64_t{1} << (except & 63));
      if (d) return false;
    }
    return true;
  }

  bool can_right(const State& s, Vertex z) const {
    const VertexSet& nz = g_.neighbours(z);
    const auto& bw = s.b.words();
    const auto& nw = nz.words();
    for (std::size_t i = 0; i < bw.size(); ++i) {
      std::uint64_t w = bw[i] & nw[i];
      while (w) {
        auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        if (!agree_within(g_.neighbours(v), nz, s.b, v)) return false;
      }
    }
    return true;
  }

  bool can_left(const State& s, Vertex z) const {
    const VertexSet& nz = g_.neighbours(z);
    switch (kind_) {
      case PartitionKind::monopolar: return !nz.intersects(s.a);
      case PartitionKind::unipolar: return s.a.is_subset_of(nz);
      case PartitionKind::polar: {
        const auto& aw = s.a.words();
        const auto& nw = nz.words();
        for (std::size_t i = 0; i < aw.size(); ++i) {
          std::uint64_t w = aw[i] & ~nw[i];
          while (w) {
            auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
            if (!agree_within(g_.neighbours(v), nz, s.a, -1)) return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  static void assign(State& s, Vertex v, Side side) {
    s.side[static_cast<std::size_t>(v)] = side;
    (side == Side::left ? s.a : s.b).insert(v);
  }

  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < s.side.size(); ++v) {
        if (s.side[v] != Side::undecided) continue;
        const bool l = can_left(s, static_cast<Vertex>(v));
        const bool r = can_right(s, static_cast<Vertex>(v));
        if (!l && !r) return false;
        if (l != r) {
          assign(s, static_cast<Vertex>(v), l ? Side::left : Side::right);
          changed = true;
        }
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  template <typename Visit>
  bool search(State& s, Visit& visit) const {
    if (!propagate(s)) return true;
    std::size_t v = 0;
    while (v < s.side.size() && s.side[v] != Side::undecided) ++v;
    if (v == s.side.size()) return visit(static_cast<const VertexSet&>(s.a));
    for (Side side : {Side::left, Side::right}) {
      // Both options are open here, otherwise propagation would have fixed v.
      State next = s;
      assign(next, static_cast<Vertex>(v), side);
      if (!search(next, visit)) return false;
    }
    return true;
  }

  const Graph& g_;
  PartitionKind kind_;
};

inline std::optional<Partition> first_partition(const Graph& g, PartitionKind kind) {
  std::optional<Partition> found;
  PartitionSearch(g, kind).run([&](const VertexSet& left) {
    found = Partition::from_left(kind, left);
    return false;
  });
  return found;
}

}  // namespace detail

inline std::optional<Partition> solve_monopolar(const Graph& g) {
  return detail::first_partition(g, PartitionKind::monopolar);
}

inline std::optional<Partition> solve_polar(const Graph& g) {
  return detail::first_partition(g, PartitionKind::polar);
}

/// Throws CapacityError above limits.unipolar_max_n vertices.
inline std::optional<Partition> solve_unipolar(const Graph& g, const SolverLimits& limits = {}) {
  if (g.order() > limits.unipolar_max_n)
    throw CapacityError("unipolar search is limited to " + std::to_string(limits.unipolar_max_n) + " vertices, graph has " +
                        std::to_string(g.order()));
  return detail::first_partition(g, PartitionKind::unipolar);
}

inline std::optional<Partition> solve(const Graph& g, PartitionKind kind, const SolverLimits& limits = {}) {
  switch (kind) {
    case PartitionKind::monopolar: return solve_monopolar(g);
    case PartitionKind::polar: return solve_polar(g);
    case PartitionKind::unipolar: return solve_unipolar(g, limits);
  }
  return std::nullopt;
}

/// Number of partitions of the given kind, counting stops at `limit`.
inline std::size_t count_partitions(const Graph& g, PartitionKind kind, std::size_t limit) {
  std::size_t count = 0;
  detail::PartitionSearch(g, kind).run([&](const VertexSet&) { return ++count < limit; });
  return count;
}

/// All partitions of the given kind found by the search, sorted by
/// A-membership. No size bound; intended for structured instances.
inline std::vector<Partition> search_all_partitions(const Graph& g, PartitionKind kind) {
  std::vector<Partition> out;
  detail::PartitionSearch(g, kind).run([&](const VertexSet& left) {
    out.push_back(Partition::from_left(kind, left));
    return true;
  });
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

}  // namespace polaritylab

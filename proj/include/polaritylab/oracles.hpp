#pragma once

// Slow reference checks used by tests and the acceptance suite. They avoid
// the algorithms they are compared against.

#include <cstddef>
#include <string>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"

namespace polaritylab::oracle {

inline constexpr std::size_t max_orientation_edges = 18;

/// Tries edge directions one edge at a time (lexicographic edge order, u->v
/// first) and abandons a branch as soon as two directed arcs a->b, b->c are
/// present while a and c are non-adjacent or the arc between them points c->a.
/// Each 2-path is examined when its last arc is placed, so a full assignment
/// reaching the leaf is transitive.
inline bool has_transitive_orientation(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > max_orientation_edges)
    throw CapacityError("orientation oracle is limited to " + std::to_string(max_orientation_edges) + " edges");
  const std::size_t n = g.order();
  // dir[u][v]: 1 if u->v decided, 0 otherwise.
  std::vector<std::vector<char>> dir(n, std::vector<char>(n, 0));
  auto arc = [&](std::size_t a, std::size_t b) { return dir[a][b] != 0; };
  auto consistent = [&](std::size_t u, std::size_t v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      const auto W = static_cast<Vertex>(w);
      // u->v->w needs u->w.
      if (arc(v, w) && (!g.adjacent(static_cast<Vertex>(u), W) || arc(w, u))) return false;
      // w->u->v needs w->v.
      if (arc(w, u) && (!g.adjacent(W, static_cast<Vertex>(v)) || arc(v, w))) return false;
      // v->w->u would need v->u.
      if (arc(v, w) && arc(w, u)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges.size()) return true;
    const auto u = static_cast<std::size_t>(edges[i].first);
    const auto v = static_cast<std::size_t>(edges[i].second);
    for (int flip = 0; flip < 2; ++flip) {
      const std::size_t a = flip ? v : u;
      const std::size_t b = flip ? u : v;
      dir[a][b] = 1;
      if (consistent(a, b) && self(self, i + 1)) return true;
      dir[a][b] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace polaritylab::oracle

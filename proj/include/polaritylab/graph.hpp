#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/vertex_set.hpp"

namespace polaritylab {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable undirected simple graph on vertices 0..n-1 with optional labels.
/// Labels never take part in equality.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, out-of-range endpoints, or a label list
  /// of the wrong length. Duplicate pairs (in either order) are merged.
  static Graph make(std::size_t n, const std::vector<Edge>& edges,
                    std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u,v) with u<v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < rows_.size(); ++u)
      rows_[u].for_each([&](Vertex v) {
        if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
      });
    return out;
  }

  bool has_labels() const noexcept { return labels_.has_value(); }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  /// The vertex label, or its 1-based index when the graph is unlabelled.
  std::string label(Vertex v) const {
    if (labels_) return (*labels_).at(static_cast<std::size_t>(v));
    return std::to_string(v + 1);
  }

  /// Index of the vertex carrying `name`, if any.
  std::optional<Vertex> find_label(const std::string& name) const {
    if (!labels_) return std::nullopt;
    auto it = std::find(labels_->begin(), labels_->end(), name);
    if (it == labels_->end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_->begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    auto n = static_cast<Vertex>(rows_.size());
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a self-loop");
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(static_cast<std::size_t>(u)).contains(v); }

  GraphBuilder& set_labels(std::vector<std::string> labels) {
    if (labels.size() != rows_.size())
      throw GraphError("expected " + std::to_string(rows_.size()) + " labels, got " +
                       std::to_string(labels.size()));
    labels_ = std::move(labels);
    return *this;
  }

  Graph build() const {
    Graph g;
    g.rows_ = rows_;
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    g.edge_count_ = twice / 2;
    g.labels_ = labels_;
    return g;
  }

 private:
  std::vector<VertexSet> rows_;
  std::optional<std::vector<std::string>> labels_;
};

inline Graph Graph::make(std::size_t n, const std::vector<Edge>& edges,
                         std::optional<std::vector<std::string>> labels) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  if (labels) b.set_labels(std::move(*labels));
  return b.build();
}

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges,
                        std::optional<std::vector<std::string>> labels = std::nullopt) {
  return Graph::make(n, edges, std::move(labels));
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return b.build();
}

inline Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return b.build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t v = 0; v + 1 < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return b.build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  if (g.labels()) b.set_labels(*g.labels());
  return b.build();
}

inline void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw GraphError("vertex set over " + std::to_string(s.universe()) + " vertices used with a graph on " +
                     std::to_string(g.order()));
}

/// G[S] with vertices renumbered 0..|S|-1 in increasing original order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> original vertex
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  check_universe(g, s);
  InducedSubgraph out;
  out.original = s.members();
  GraphBuilder b(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (std::size_t j = i + 1; j < out.original.size(); ++j)
      if (g.adjacent(out.original[i], out.original[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  if (g.labels()) {
    std::vector<std::string> labels;
    for (Vertex v : out.original) labels.push_back(g.label(v));
    b.set_labels(std::move(labels));
  }
  out.graph = b.build();
  return out;
}

/// g followed by h, with h's vertices shifted by g.order() and no cross edges.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
  if (g.has_labels() || h.has_labels()) {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < g.order(); ++v) labels.push_back(g.label(static_cast<Vertex>(v)));
    for (std::size_t v = 0; v < h.order(); ++v) labels.push_back(h.label(static_cast<Vertex>(v)));
    b.set_labels(std::move(labels));
  }
  return b.build();
}

/// 2G: two disjoint copies of g.
inline Graph double_graph(const Graph& g) { return disjoint_union(g, g); }

/// Maximal connected vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  for (Vertex root = unseen.first(); root >= 0; root = unseen.first()) {
    VertexSet comp(g.order());
    VertexSet frontier = VertexSet::of(g.order(), {root});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_clique(const Graph& g, const VertexSet& s) {
  check_universe(g, s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok) ok = (s - g.neighbours(v) - VertexSet::of(g.order(), {v})).empty();
  });
  return ok;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  check_universe(g, s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok) ok = !g.neighbours(v).intersects(s);
  });
  return ok;
}

/// Union of disjoint cliques: every connected component is a clique.
inline bool is_cluster(const Graph& g) {
  for (const auto& comp : connected_components(g))
    if (!is_clique(g, comp)) return false;
  return true;
}

/// Induced path on three vertices, searched directly over all triples.
inline bool has_induced_p3(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex mid = 0; mid < n; ++mid)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (a != mid && b != mid && g.adjacent(mid, a) && g.adjacent(mid, b) && !g.adjacent(a, b))
          return true;
  return false;
}

/// Complement of a union of disjoint cliques (complete multipartite graph).
inline bool is_co_cluster(const Graph& g) { return is_cluster(complement(g)); }

/// A co-cluster is connected or has no edges. Throws PreconditionError when g
/// is not a co-cluster.
inline bool co_cluster_connectivity_check(const Graph& g) {
  if (!is_co_cluster(g)) throw PreconditionError("graph is not the complement of a union of disjoint cliques");
  return g.edge_count() == 0 || is_connected(g);
}

inline bool has_k4(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = g.neighbours(a).next(a + 1); b >= 0; b = g.neighbours(a).next(b + 1)) {
      VertexSet common = g.neighbours(a) & g.neighbours(b);
      for (Vertex c = common.next(b + 1); c >= 0; c = common.next(c + 1))
        if ((common & g.neighbours(c)).next(c + 1) >= 0) return true;
    }
  return false;
}

/// Size of a largest clique, by exhaustive branching. Small graphs only.
inline std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  auto grow = [&](auto&& self, std::size_t size, VertexSet candidates) -> void {
    best = std::max(best, size);
    if (size + candidates.size() <= best) return;
    for (Vertex v = candidates.first(); v >= 0; v = candidates.first()) {
      candidates.erase(v);
      self(self, size + 1, candidates & g.neighbours(v));
      if (size + candidates.size() <= best) return;
    }
  };
  grow(grow, 0, g.vertices());
  return best;
}

/// Brute-force isomorphism test with degree pruning; at most 10 vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > 10 || h.order() > 10) throw CapacityError("isomorphism search is limited to 10 vertices");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<Vertex> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || g.degree(static_cast<Vertex>(v)) != h.degree(static_cast<Vertex>(w))) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) == h.adjacent(map[u], static_cast<Vertex>(w));
      if (!ok) continue;
      map[v] = static_cast<Vertex>(w);
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace polaritylab

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"

namespace polaritylab {

using Arc = std::pair<Vertex, Vertex>;  // (u, v) means u -> v

/// A direction for every edge of a graph.
class Orientation {
 public:
  Orientation() = default;

  /// Throws GraphError unless every edge of g appears exactly once in arcs,
  /// in one direction, and no arc joins non-adjacent vertices.
  static Orientation make(const Graph& g, const std::vector<Arc>& arcs) {
    Orientation o;
    o.graph_ = g;
    o.out_.assign(g.order(), VertexSet(g.order()));
    for (auto [u, v] : arcs) {
      const auto n = static_cast<Vertex>(g.order());
      if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v))
        throw GraphError("arc " + std::to_string(u + 1) + "->" + std::to_string(v + 1) + " is not an edge");
      if (o.points(u, v) || o.points(v, u))
        throw GraphError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} oriented twice");
      o.out_[static_cast<std::size_t>(u)].insert(v);
    }
    if (arcs.size() != g.edge_count()) throw GraphError("orientation leaves some edges undirected");
    return o;
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }

  bool points(Vertex u, Vertex v) const { return out_.at(static_cast<std::size_t>(u)).contains(v); }
  const VertexSet& out(Vertex v) const { return out_.at(static_cast<std::size_t>(v)); }
  VertexSet in(Vertex v) const { return graph_.neighbours(v) - out(v); }

  /// Arcs sorted lexicographically.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (std::size_t u = 0; u < out_.size(); ++u)
      out_[u].for_each([&](Vertex v) { out.emplace_back(static_cast<Vertex>(u), v); });
    return out;
  }

  Orientation reversed() const {
    std::vector<Arc> flipped;
    for (auto [u, v] : arcs()) flipped.emplace_back(v, u);
    return make(graph_, flipped);
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.graph_ == b.graph_ && a.out_ == b.out_;
  }

 private:
  Graph graph_;
  std::vector<VertexSet> out_;
};

/// a->b and b->c imply a->c.
inline bool is_transitive(const Orientation& o) {
  for (std::size_t v = 0; v < o.order(); ++v) {
    const VertexSet& out_v = o.out(static_cast<Vertex>(v));
    bool ok = true;
    out_v.for_each([&](Vertex w) {
      if (ok) ok = o.out(w).is_subset_of(out_v);
    });
    if (!ok) return false;
  }
  return true;
}

/// Vertices without outgoing arcs.
inline VertexSet sinks(const Orientation& o) {
  VertexSet s(o.order());
  for (std::size_t v = 0; v < o.order(); ++v)
    if (o.out(static_cast<Vertex>(v)).empty()) s.insert(static_cast<Vertex>(v));
  return s;
}

/// Transitive orientation by implication-class decomposition: orient one
/// remaining edge, force its implication class in the remaining graph (an
/// oriented edge ab forces ac when b and c are non-adjacent there, and cb when
/// a and c are), remove the class, repeat. A class containing both directions
/// of an edge means g is not a comparability graph.
///
/// Every class may be taken in either direction. With required_sinks, classes
/// are reversed as needed so no arc leaves a required sink, and edges at those
/// vertices seed the first classes; if some class cannot be directed that way
/// the function returns nullopt. The result is always re-checked with
/// is_transitive before it is returned.
inline std::optional<Orientation> find_transitive_orientation(const Graph& g,
                                                              const std::optional<VertexSet>& required_sinks = std::nullopt) {
  const std::size_t n = g.order();
  if (required_sinks) check_universe(g, *required_sinks);
  std::vector<VertexSet> remaining(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) remaining[v] = g.neighbours(static_cast<Vertex>(v));
  std::vector<Arc> result;
  result.reserve(g.edge_count());

  auto pick_seed = [&]() -> std::optional<Arc> {
    if (required_sinks) {
      std::optional<Arc> seed;
      required_sinks->for_each([&](Vertex s) {
        if (!seed && !remaining[static_cast<std::size_t>(s)].empty())
          seed = Arc{remaining[static_cast<std::size_t>(s)].first(), s};
      });
      if (seed) return seed;
    }
    for (std::size_t u = 0; u < n; ++u)
      if (!remaining[u].empty()) return Arc{static_cast<Vertex>(u), remaining[u].first()};
    return std::nullopt;
  };

  std::vector<VertexSet> cls(n, VertexSet(n));  // arcs of the current class
  for (auto seed = pick_seed(); seed; seed = pick_seed()) {
    for (auto& row : cls) row = VertexSet(n);
    std::vector<Arc> members;
    std::deque<Arc> queue;
    bool conflict = false;
    auto add = [&](Vertex a, Vertex b) {
      if (cls[static_cast<std::size_t>(b)].contains(a)) conflict = true;
      if (conflict || cls[static_cast<std::size_t>(a)].contains(b)) return;
      cls[static_cast<std::size_t>(a)].insert(b);
      members.emplace_back(a, b);
      queue.emplace_back(a, b);
    };
    add(seed->first, seed->second);
    while (!queue.empty() && !conflict) {
      auto [a, b] = queue.front();
      queue.pop_front();
      const VertexSet& ra = remaining[static_cast<std::size_t>(a)];
      const VertexSet& rb = remaining[static_cast<std::size_t>(b)];
      (ra - rb).for_each([&](Vertex c) {
        if (c != b) add(a, c);
      });
      (rb - ra).for_each([&](Vertex c) {
        if (c != a) add(c, b);
      });
    }
    if (conflict) return std::nullopt;

    if (required_sinks) {
      auto leaves_sink = [&](bool flipped) {
        return std::any_of(members.begin(), members.end(),
                           [&](const Arc& arc) { return required_sinks->contains(flipped ? arc.second : arc.first); });
      };
      if (leaves_sink(false)) {
        if (leaves_sink(true)) return std::nullopt;
        for (auto& arc : members) std::swap(arc.first, arc.second);
      }
    }
    for (auto [a, b] : members) {
      result.emplace_back(a, b);
      remaining[static_cast<std::size_t>(a)].erase(b);
      remaining[static_cast<std::size_t>(b)].erase(a);
    }
  }

  Orientation o = Orientation::make(g, result);
  if (!is_transitive(o)) return std::nullopt;
  if (required_sinks && !required_sinks->is_subset_of(sinks(o))) return std::nullopt;
  return o;
}

inline bool is_comparability(const Graph& g) { return find_transitive_orientation(g).has_value(); }

/// Comparability graphs are perfect, so 3-colourable here means K4-free.
inline bool is_3col_comparability(const Graph& g) { return !has_k4(g) && is_comparability(g); }

struct Coloring {
  std::vector<int> colors;

  int num_colors() const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  bool is_proper(const Graph& g) const {
    if (colors.size() != g.order()) return false;
    for (auto [u, v] : g.edges())
      if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
  }
};

/// Colours each vertex by the number of vertices on a longest directed path
/// ending at it, minus one. On a transitive orientation the colour count is
/// the clique number. Throws PreconditionError on non-transitive input.
inline Coloring chain_coloring(const Orientation& o) {
  if (!is_transitive(o)) throw PreconditionError("chain colouring needs a transitive orientation");
  const std::size_t n = o.order();
  std::vector<std::size_t> indegree(n, 0);
  for (auto [u, v] : o.arcs()) ++indegree[static_cast<std::size_t>(v)];
  Coloring c{std::vector<int>(n, 0)};
  std::vector<Vertex> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<Vertex>(v));
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    o.out(v).for_each([&](Vertex w) {
      auto& cw = c.colors[static_cast<std::size_t>(w)];
      cw = std::max(cw, c.colors[static_cast<std::size_t>(v)] + 1);
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    });
  }
  return c;
}

/// "p orient n m" followed by sorted "a u v" lines, 1-based.
inline std::string write_orientation(const Orientation& o) {
  std::ostringstream out;
  const auto arcs = o.arcs();
  out << "p orient " << o.order() << ' ' << arcs.size() << '\n';
  for (auto [u, v] : arcs) out << "a " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

namespace detail {

struct ArcList {
  std::size_t n = 0;
  std::vector<Arc> arcs;  // 0-based
};

/// Parses "p orient n m" and m arc lines starting at lines[pos].
inline ArcList parse_orient_section(const std::vector<std::string>& lines, std::size_t& pos) {
  ArcList out;
  std::size_t m = 0;
  bool have_header = false;
  for (; pos < lines.size() && !have_header; ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    const std::size_t ln = pos + 1;
    if (toks.size() != 4 || toks[0] != "p" || toks[1] != "orient")
      throw ParseError(ln, "expected header 'p orient <n> <m>'");
    auto nv = text::expect_int(toks[2], ln, "vertex count");
    auto mv = text::expect_int(toks[3], ln, "arc count");
    if (nv < 0 || mv < 0) throw ParseError(ln, "negative count in header");
    out.n = static_cast<std::size_t>(nv);
    m = static_cast<std::size_t>(mv);
    have_header = true;
  }
  if (!have_header) throw ParseError(0, "missing header 'p orient <n> <m>'");
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    if (toks[0] != "a") break;
    const std::size_t ln = pos + 1;
    if (toks.size() != 3) throw ParseError(ln, "expected 'a <u> <v>'");
    auto u = text::expect_int(toks[1], ln, "tail");
    auto v = text::expect_int(toks[2], ln, "head");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > out.n || static_cast<std::size_t>(v) > out.n)
      throw ParseError(ln, "arc endpoint out of range 1.." + std::to_string(out.n));
    out.arcs.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (out.arcs.size() != m)
    throw ParseError(pos < lines.size() ? pos + 1 : 0, "header declares " + std::to_string(m) + " arcs but " +
                                                            std::to_string(out.arcs.size()) + " were given");
  return out;
}

}  // namespace detail

/// Reads an orientation of g. Throws ParseError on malformed text and
/// GraphError when the arcs do not orient exactly the edges of g.
inline Orientation read_orientation(std::string_view input, const Graph& g) {
  auto lines = text::lines(input);
  std::size_t pos = 0;
  auto parsed = detail::parse_orient_section(lines, pos);
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (!toks.empty() && !text::is_comment(toks)) throw ParseError(pos + 1, "unexpected line after arc list");
  }
  if (parsed.n != g.order()) throw GraphError("orientation is over a different number of vertices");
  return Orientation::make(g, parsed.arcs);
}

}  // namespace polaritylab

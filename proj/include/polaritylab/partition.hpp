#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"

namespace polaritylab {

/// Which constraint the left block A carries. The right block B is always a
/// union of disjoint cliques.
enum class PartitionKind {
  monopolar,  // A independent
  polar,      // G[A] is a co-cluster
  unipolar,   // A a clique
};

inline std::string_view to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::monopolar: return "monopolar";
    case PartitionKind::polar: return "polar";
    case PartitionKind::unipolar: return "unipolar";
  }
  return "?";
}

inline std::optional<PartitionKind> parse_kind(std::string_view s) {
  if (s == "monopolar") return PartitionKind::monopolar;
  if (s == "polar") return PartitionKind::polar;
  if (s == "unipolar") return PartitionKind::unipolar;
  return std::nullopt;
}

struct Partition {
  PartitionKind kind = PartitionKind::monopolar;
  VertexSet a_side;  // "left"
  VertexSet b_side;  // "right"

  static Partition from_left(PartitionKind kind, const VertexSet& left) {
    return Partition{kind, left, ~left};
  }

  bool is_left(Vertex v) const { return a_side.contains(v); }
  bool is_right(Vertex v) const { return b_side.contains(v); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Lexicographic order by A-membership (sorted member lists).
inline bool partition_less(const Partition& p, const Partition& q) { return lex_less(p.a_side, q.a_side); }

/// True iff p satisfies its kind's constraints on g. Throws GraphError when the
/// blocks overlap, miss a vertex, or do not match g's vertex count; that is a
/// malformed partition, not a "no".
inline bool validate(const Graph& g, const Partition& p) {
  if (p.a_side.universe() != g.order() || p.b_side.universe() != g.order())
    throw GraphError("partition blocks do not match the graph's vertex count");
  if (p.a_side.intersects(p.b_side)) throw GraphError("partition blocks overlap");
  if ((p.a_side | p.b_side) != g.vertices()) throw GraphError("partition blocks do not cover every vertex");
  if (!is_cluster(induced(g, p.b_side).graph)) return false;
  switch (p.kind) {
    case PartitionKind::monopolar: return is_independent(g, p.a_side);
    case PartitionKind::unipolar: return is_clique(g, p.a_side);
    case PartitionKind::polar: return is_co_cluster(induced(g, p.a_side).graph);
  }
  return false;
}

/// "kind: <kind>", "A: ...", "B: ..." with sorted 1-based vertices.
inline std::string write_partition(const Partition& p) {
  std::ostringstream out;
  out << "kind: " << to_string(p.kind) << "\nA:";
  for (Vertex v : p.a_side.members()) out << ' ' << v + 1;
  out << "\nB:";
  for (Vertex v : p.b_side.members()) out << ' ' << v + 1;
  out << '\n';
  return out.str();
}

/// Inverse of write_partition for a graph on n vertices.
inline Partition read_partition(std::string_view input, std::size_t n) {
  auto lines = text::lines(input);
  std::vector<std::string_view> keys = {"kind:", "A:", "B:"};
  std::vector<std::vector<std::string_view>> fields;
  std::size_t last_line = 0;
  for (std::size_t i = 0; i < lines.size() && fields.size() < keys.size(); ++i) {
    auto toks = text::tokens(lines[i]);
    if (toks.empty()) continue;
    if (toks[0] != keys[fields.size()])
      throw ParseError(i + 1, "expected '" + std::string(keys[fields.size()]) + "'");
    fields.push_back(toks);
    last_line = i + 1;
  }
  if (fields.size() != keys.size()) throw ParseError(0, "incomplete partition");
  if (fields[0].size() != 2) throw ParseError(last_line, "expected 'kind: <kind>'");
  auto kind = parse_kind(fields[0][1]);
  if (!kind) throw ParseError(0, "unknown partition kind '" + std::string(fields[0][1]) + "'");
  Partition p{*kind, VertexSet(n), VertexSet(n)};
  for (std::size_t block = 1; block <= 2; ++block) {
    VertexSet& side = block == 1 ? p.a_side : p.b_side;
    for (std::size_t t = 1; t < fields[block].size(); ++t) {
      auto v = text::expect_int(fields[block][t], 0, "vertex");
      if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError(0, "vertex " + std::to_string(v) + " out of range");
      side.insert(static_cast<Vertex>(v - 1));
    }
  }
  return p;
}

}  // namespace polaritylab

#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "polaritylab/comparability.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/formula.hpp"
#include "polaritylab/gadget.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/partition.hpp"

namespace polaritylab {

struct VertexRange {
  Vertex first = 0;
  Vertex last = 0;  // inclusive
};

/// G_phi together with the role of every vertex. Vertices are numbered x_1..x_n
/// first, then one gadget copy per clause in clause order, each copy in the
/// gadget's own vertex order.
struct LabeledReduction {
  Graph graph;
  Formula formula;
  std::vector<Vertex> x_vertex_of;                 // variable i+1 -> vertex
  std::vector<VertexRange> copy_of;                // clause -> its gadget copy
  std::vector<std::array<Vertex, 3>> terminal_of;  // clause, position -> vertex
  std::vector<Vertex> hub_of;                      // clause -> hub vertex
  CertifiedGadget gadget;
};

/// Throws Error when r breaks a structural invariant of the construction:
/// x-vertices independent with pairwise disjoint neighbourhoods, and exactly
/// the 3m cross edges x_{c_j} -- t_{i,j}.
inline void check_reduction_structure(const LabeledReduction& r) {
  const Graph& g = r.graph;
  VertexSet xs(g.order());
  for (Vertex x : r.x_vertex_of) xs.insert(x);
  if (!is_independent(g, xs)) throw Error("x-vertices are not independent");
  VertexSet seen(g.order());
  std::size_t cross = 0;
  for (Vertex x : r.x_vertex_of) {
    if (g.neighbours(x).intersects(seen)) throw Error("x-vertices share a neighbour");
    seen |= g.neighbours(x);
    cross += g.degree(x);
  }
  if (cross != 3 * r.formula.clauses.size())
    throw Error("expected " + std::to_string(3 * r.formula.clauses.size()) + " cross edges, found " + std::to_string(cross));
  for (std::size_t i = 0; i < r.formula.clauses.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!g.adjacent(r.x_vertex_of[static_cast<std::size_t>(r.formula.clauses[i][j] - 1)], r.terminal_of[i][j]))
        throw Error("missing cross edge for clause " + std::to_string(i + 1));
}

/// Builds G_phi: n isolated x-vertices, one copy of the gadget per clause,
/// and for clause (c_k, c_l, c_p) the edges x_k t_1, x_l t_2, x_p t_3 of its copy.
inline LabeledReduction build_reduction(const Formula& f, const CertifiedGadget& gadget) {
  Formula::make(f.num_vars, f.clauses);  // validates
  const Graph& h = gadget.graph();
  const std::size_t s = h.order();
  const std::size_t order = f.num_vars + f.clauses.size() * s;
  GraphBuilder b(order);
  std::vector<std::string> labels;
  labels.reserve(order);

  LabeledReduction r{Graph{}, f, {}, {}, {}, {}, gadget};
  for (std::size_t k = 0; k < f.num_vars; ++k) {
    r.x_vertex_of.push_back(static_cast<Vertex>(k));
    labels.push_back("x" + std::to_string(k + 1));
  }
  const auto h_edges = h.edges();
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto offset = static_cast<Vertex>(f.num_vars + i * s);
    for (auto [u, v] : h_edges) b.add_edge(u + offset, v + offset);
    for (std::size_t v = 0; v < s; ++v) labels.push_back("H" + std::to_string(i + 1) + "." + h.label(static_cast<Vertex>(v)));
    r.copy_of.push_back({offset, offset + static_cast<Vertex>(s) - 1});
    std::array<Vertex, 3> terms{};
    for (std::size_t j = 0; j < 3; ++j) {
      terms[j] = gadget.gadget().terminals[j] + offset;
      b.add_edge(r.x_vertex_of[static_cast<std::size_t>(f.clauses[i][j] - 1)], terms[j]);
    }
    r.terminal_of.push_back(terms);
    r.hub_of.push_back(gadget.gadget().hub + offset);
  }
  b.set_labels(std::move(labels));
  r.graph = b.build();
  check_reduction_structure(r);
  return r;
}

/// Certifies the gadget first; throws ContractViolation if it fails.
inline LabeledReduction build_reduction(const Formula& f, const ClauseGadget& gadget) {
  return build_reduction(f, CertifiedGadget::certify(gadget));
}

/// The gadget's orientation on every copy plus x -> t on every cross edge.
inline Orientation reduction_orientation(const LabeledReduction& r) {
  std::vector<Arc> arcs;
  arcs.reserve(r.graph.edge_count());
  const auto gadget_arcs = r.gadget.gadget().orientation.arcs();
  for (const auto& copy : r.copy_of)
    for (auto [u, v] : gadget_arcs) arcs.emplace_back(u + copy.first, v + copy.first);
  for (std::size_t i = 0; i < r.formula.clauses.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j)
      arcs.emplace_back(r.x_vertex_of[static_cast<std::size_t>(r.formula.clauses[i][j] - 1)], r.terminal_of[i][j]);
  return Orientation::make(r.graph, arcs);
}

/// True variables go left, false ones right; each copy takes the gadget
/// partition whose right terminal belongs to the clause's true variable.
/// Throws PreconditionError when a is not a 1-in-3 assignment.
inline Partition assignment_to_partition(const LabeledReduction& r, const Assignment& a) {
  if (!check_1in3(r.formula, a)) throw PreconditionError("assignment is not a 1-in-3 assignment");
  VertexSet left(r.graph.order());
  for (std::size_t k = 0; k < r.formula.num_vars; ++k)
    if (a.values[k]) left.insert(r.x_vertex_of[k]);
  for (std::size_t i = 0; i < r.formula.clauses.size(); ++i) {
    const auto& c = r.formula.clauses[i];
    int position = 0;
    while (!a[c[static_cast<std::size_t>(position)]]) ++position;
    const Partition& local = r.gadget.partition_with_right_terminal(position);
    local.a_side.for_each([&](Vertex v) { left.insert(v + r.copy_of[i].first); });
  }
  Partition p = Partition::from_left(PartitionKind::monopolar, left);
  if (!validate(r.graph, p)) throw Error("assembled partition is not monopolar");
  return p;
}

/// Reads variable values off the x-vertices (left = true). Throws
/// PreconditionError unless p is a valid monopolar partition of r.graph, and
/// Error if the result is not 1-in-3.
inline Assignment partition_to_assignment(const LabeledReduction& r, const Partition& p) {
  if (p.kind != PartitionKind::monopolar || !validate(r.graph, p))
    throw PreconditionError("not a monopolar partition of the reduction graph");
  Assignment a{std::vector<bool>(r.formula.num_vars)};
  for (std::size_t k = 0; k < r.formula.num_vars; ++k) a.values[k] = p.is_left(r.x_vertex_of[k]);
  if (!check_1in3(r.formula, a)) throw Error("extracted assignment is not 1-in-3");
  return a;
}

/// Sidecar lines "x <var> <vertex>", "copy <clause> <first> <last>",
/// "t <clause> <pos> <vertex>", "hub <clause> <vertex>", all 1-based.
inline std::string write_reduction_map(const LabeledReduction& r) {
  std::ostringstream out;
  for (std::size_t k = 0; k < r.x_vertex_of.size(); ++k) out << "x " << k + 1 << ' ' << r.x_vertex_of[k] + 1 << '\n';
  for (std::size_t i = 0; i < r.copy_of.size(); ++i)
    out << "copy " << i + 1 << ' ' << r.copy_of[i].first + 1 << ' ' << r.copy_of[i].last + 1 << '\n';
  for (std::size_t i = 0; i < r.terminal_of.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) out << "t " << i + 1 << ' ' << j + 1 << ' ' << r.terminal_of[i][j] + 1 << '\n';
  for (std::size_t i = 0; i < r.hub_of.size(); ++i) out << "hub " << i + 1 << ' ' << r.hub_of[i] + 1 << '\n';
  return out.str();
}

}  // namespace polaritylab

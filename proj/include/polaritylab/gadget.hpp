#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/brute.hpp"
#include "polaritylab/comparability.hpp"
#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/partition.hpp"
#include "polaritylab/solver.hpp"

namespace polaritylab {

// ---------------------------------------------------------------------------
// Q: five vertices with exactly one monopolar partition.

namespace q_vertex {
inline constexpr Vertex v1 = 0;
inline constexpr Vertex v2 = 1;
inline constexpr Vertex v3 = 2;
inline constexpr Vertex v4 = 3;
inline constexpr Vertex u = 4;
}  // namespace q_vertex

inline const std::vector<Edge>& q_edges() {
  using namespace q_vertex;
  static const std::vector<Edge> edges = {{v1, v2}, {v1, v3}, {v1, v4}, {v2, v3}, {v2, v4}, {u, v3}, {u, v4}};
  return edges;
}

/// The partition ({v3,v4}, {v1,v2,u}).
inline Partition q_partition() {
  return Partition::from_left(PartitionKind::monopolar, VertexSet::of(5, {q_vertex::v3, q_vertex::v4}));
}

/// True iff g has the single monopolar partition ({v3,v4},{v1,v2,u}) (found by
/// exhaustive enumeration), is K4-free, and is a comparability graph.
/// Throws PreconditionError unless g has 5 vertices.
inline bool verify_q(const Graph& g) {
  if (g.order() != 5) throw PreconditionError("Q has 5 vertices, got " + std::to_string(g.order()));
  const auto partitions = enumerate_monopolar(g);
  return partitions.size() == 1 && partitions.front() == q_partition() && !has_k4(g) && is_comparability(g);
}

/// Throws Error if the reconstruction ever stops satisfying verify_q.
inline Graph build_q() {
  Graph q = make_graph(5, q_edges(), std::vector<std::string>{"v1", "v2", "v3", "v4", "u"});
  if (!verify_q(q)) throw Error("Q construction does not have the unique monopolar partition");
  return q;
}

/// Transitive orientation of Q: v3 and v4 are sources, v2 and u are sinks.
inline Orientation q_orientation(const Graph& q) {
  using namespace q_vertex;
  return Orientation::make(q, {{v3, v1}, {v3, v2}, {v4, v1}, {v4, v2}, {v1, v2}, {v3, u}, {v4, u}});
}

// ---------------------------------------------------------------------------
// Clause gadget contract.

/// A graph with three terminals and a hub, together with an orientation.
struct ClauseGadget {
  Graph graph;
  std::array<Vertex, 3> terminals{};
  Vertex hub = 0;
  Orientation orientation;
};

enum class GadgetCheck {
  g1_one_right_terminal,    // every monopolar partition has exactly one terminal in B
  g2_three_partitions,      // exactly three, told apart by the right terminal
  g3_terminal_sinks,        // transitive orientation, terminals are sinks
  g4_k4_free,
  g5_hub,                   // hub adjacent to the terminals and always in B
};

inline std::string_view check_name(GadgetCheck c) {
  switch (c) {
    case GadgetCheck::g1_one_right_terminal: return "G1";
    case GadgetCheck::g2_three_partitions: return "G2";
    case GadgetCheck::g3_terminal_sinks: return "G3";
    case GadgetCheck::g4_k4_free: return "G4";
    case GadgetCheck::g5_hub: return "G5";
  }
  return "?";
}

class ContractViolation : public Error {
 public:
  ContractViolation(GadgetCheck check, const std::string& detail)
      : Error(std::string(check_name(check)) + ": " + detail), check_(check) {}

  GadgetCheck check() const noexcept { return check_; }

 private:
  GadgetCheck check_;
};

struct GadgetCertificate {
  std::vector<Partition> partitions;     // all monopolar partitions, sorted
  std::vector<int> right_terminal_of;    // partition index -> terminal position 0..2
  bool orientation_check = false;
  bool k4_check = false;
  bool hub_check = false;

  /// Index into partitions of the one whose right terminal is at `position`.
  std::size_t partition_with_right_terminal(int position) const {
    auto it = std::find(right_terminal_of.begin(), right_terminal_of.end(), position);
    if (it == right_terminal_of.end()) throw PreconditionError("no partition has terminal " + std::to_string(position + 1) + " right");
    return static_cast<std::size_t>(it - right_terminal_of.begin());
  }
};

struct GadgetCheckResult {
  GadgetCertificate certificate;
  std::optional<ContractViolation> violation;  // first failed check, if any

  bool ok() const noexcept { return !violation.has_value(); }
};

/// Evaluates G1..G5 in order and stops at the first failure. Partitions come
/// from exhaustive enumeration, so the gadget must be within the brute-force
/// vertex cap (CapacityError otherwise).
inline GadgetCheckResult check_clause_gadget(const ClauseGadget& gadget) {
  const Graph& g = gadget.graph;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v : gadget.terminals)
    if (v < 0 || v >= n) throw PreconditionError("terminal " + std::to_string(v) + " out of range");
  if (gadget.hub < 0 || gadget.hub >= n) throw PreconditionError("hub out of range");
  const auto& t = gadget.terminals;
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw PreconditionError("terminals must be distinct");

  GadgetCheckResult r;
  auto fail = [&](GadgetCheck c, const std::string& why) {
    r.violation.emplace(c, why);
    return r;
  };

  r.certificate.partitions = enumerate_monopolar(g);
  for (std::size_t i = 0; i < r.certificate.partitions.size(); ++i) {
    const auto& p = r.certificate.partitions[i];
    int count = 0;
    int position = -1;
    for (int j = 0; j < 3; ++j)
      if (p.is_right(t[static_cast<std::size_t>(j)])) {
        ++count;
        position = j;
      }
    if (count != 1)
      return fail(GadgetCheck::g1_one_right_terminal,
                  "a monopolar partition has " + std::to_string(count) + " terminals on the right");
    r.certificate.right_terminal_of.push_back(position);
  }

  if (r.certificate.partitions.size() != 3)
    return fail(GadgetCheck::g2_three_partitions,
                "expected 3 monopolar partitions, found " + std::to_string(r.certificate.partitions.size()));
  {
    auto rt = r.certificate.right_terminal_of;
    std::sort(rt.begin(), rt.end());
    if (rt != std::vector<int>{0, 1, 2})
      return fail(GadgetCheck::g2_three_partitions, "two partitions share the same right terminal");
  }

  if (!(gadget.orientation.graph() == g)) return fail(GadgetCheck::g3_terminal_sinks, "orientation is of a different graph");
  if (!is_transitive(gadget.orientation)) return fail(GadgetCheck::g3_terminal_sinks, "orientation is not transitive");
  const VertexSet sink_set = sinks(gadget.orientation);
  for (int j = 0; j < 3; ++j)
    if (!sink_set.contains(t[static_cast<std::size_t>(j)]))
      return fail(GadgetCheck::g3_terminal_sinks, "terminal t" + std::to_string(j + 1) + " is not a sink");
  r.certificate.orientation_check = true;

  if (has_k4(g)) return fail(GadgetCheck::g4_k4_free, "graph contains K4");
  r.certificate.k4_check = true;

  for (int j = 0; j < 3; ++j)
    if (!g.adjacent(gadget.hub, t[static_cast<std::size_t>(j)]))
      return fail(GadgetCheck::g5_hub, "hub is not adjacent to t" + std::to_string(j + 1));
  for (const auto& p : r.certificate.partitions)
    if (!p.is_right(gadget.hub)) return fail(GadgetCheck::g5_hub, "hub is on the left in some partition");
  r.certificate.hub_check = true;
  return r;
}

/// Throws ContractViolation naming the first failed check.
inline GadgetCertificate verify_clause_gadget(const ClauseGadget& gadget) {
  auto r = check_clause_gadget(gadget);
  if (r.violation) throw *r.violation;
  return r.certificate;
}

/// A gadget together with a certificate produced by verify_clause_gadget.
/// The only way to obtain one is through certify().
class CertifiedGadget {
 public:
  static CertifiedGadget certify(ClauseGadget gadget) {
    auto cert = verify_clause_gadget(gadget);
    return CertifiedGadget(std::move(gadget), std::move(cert));
  }

  const ClauseGadget& gadget() const noexcept { return gadget_; }
  const GadgetCertificate& certificate() const noexcept { return certificate_; }
  const Graph& graph() const noexcept { return gadget_.graph; }
  std::size_t order() const noexcept { return gadget_.graph.order(); }

  /// The monopolar partition in which the terminal at `position` is right.
  const Partition& partition_with_right_terminal(int position) const {
    return certificate_.partitions[certificate_.partition_with_right_terminal(position)];
  }

 private:
  CertifiedGadget(ClauseGadget g, GadgetCertificate c) : gadget_(std::move(g)), certificate_(std::move(c)) {}

  ClauseGadget gadget_;
  GadgetCertificate certificate_;
};

// ---------------------------------------------------------------------------
// Synthesis.

class SynthesisError : public Error {
 public:
  using Error::Error;
};

namespace synthesis {

// Fixed part of every candidate: two copies of Q, three terminals, and hub
// edges from the u-vertex of the first copy.
inline constexpr Vertex hub = 4;
inline constexpr Vertex anchor = 9;  // u-vertex of the second copy
inline constexpr std::array<Vertex, 3> terminals = {10, 11, 12};
inline constexpr std::size_t base_order = 13;

inline std::vector<std::string> labels(std::size_t connectors) {
  std::vector<std::string> out = {"v1", "v2", "v3", "v4", "hub", "w1", "w2", "w3", "w4", "anchor", "t1", "t2", "t3"};
  for (std::size_t i = 0; i < connectors; ++i) out.push_back("c" + std::to_string(i + 1));
  return out;
}

inline GraphBuilder base_builder(std::size_t order) {
  GraphBuilder b(order);
  for (auto [u, v] : q_edges()) {
    b.add_edge(u, v);
    b.add_edge(u + 5, v + 5);
  }
  for (Vertex t : terminals) b.add_edge(hub, t);
  return b;
}

/// Neighbourhood of one connector: at most one terminal, optionally the
/// anchor, and any subset of the earlier connectors.
struct ConnectorChoice {
  int terminal = -1;  // position 0..2 or -1
  bool anchor = false;
  std::uint32_t earlier = 0;  // bit j: adjacent to connector j
};

/// Choices for connector `index`, ordered by the code
/// anchor | terminal one-hot << 1 | earlier << 4, empty neighbourhoods excluded.
inline std::vector<ConnectorChoice> choices(std::size_t index) {
  std::vector<ConnectorChoice> out;
  for (std::uint32_t earlier = 0; earlier < (1u << index); ++earlier)
    for (int terminal = -1; terminal < 3; ++terminal)
      for (int anchor = 0; anchor < 2; ++anchor)
        if (earlier != 0 || terminal >= 0 || anchor != 0) out.push_back({terminal, anchor != 0, earlier});
  auto code = [](const ConnectorChoice& c) {
    return (c.anchor ? 1u : 0u) | (c.terminal >= 0 ? (2u << c.terminal) : 0u) | (c.earlier << 4);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return code(a) < code(b); });
  return out;
}

inline VertexSet terminal_set(std::size_t order) {
  return VertexSet::of(order, {terminals[0], terminals[1], terminals[2]});
}

class Search {
 public:
  Search(std::size_t connectors, std::uint64_t seed) : k_(connectors), order_(base_order + connectors) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k_; ++i) {
      options_.push_back(choices(i));
      if (seed != 0) std::shuffle(options_.back().begin(), options_.back().end(), rng);
    }
  }

  std::optional<ClauseGadget> run() {
    GraphBuilder b = base_builder(order_);
    return extend(b, 0);
  }

 private:
  // K4-freeness and comparability with sink terminals are inherited by
  // induced subgraphs, so a failing prefix rules out every completion.
  // Connectors not yet placed are isolated and do not affect either test.
  static std::optional<Orientation> admissible(const Graph& g) {
    if (has_k4(g)) return std::nullopt;
    return find_transitive_orientation(g, terminal_set(g.order()));
  }

  std::optional<ClauseGadget> extend(const GraphBuilder& b, std::size_t placed) {
    if (placed == k_) return evaluate(b);
    const auto self = static_cast<Vertex>(base_order + placed);
    for (const auto& choice : options_[placed]) {
      GraphBuilder next = b;
      if (choice.terminal >= 0) next.add_edge(self, terminals[static_cast<std::size_t>(choice.terminal)]);
      if (choice.anchor) next.add_edge(self, anchor);
      for (std::size_t j = 0; j < placed; ++j)
        if (choice.earlier & (1u << j)) next.add_edge(self, static_cast<Vertex>(base_order + j));
      if (placed + 1 < k_ && !admissible(next.build())) continue;
      if (auto found = extend(next, placed + 1)) return found;
    }
    return std::nullopt;
  }

  std::optional<ClauseGadget> evaluate(const GraphBuilder& b) const {
    GraphBuilder labelled = b;
    labelled.set_labels(labels(k_));
    Graph g = labelled.build();
    if (has_k4(g)) return std::nullopt;
    // Cheap filters before the exhaustive certificate.
    if (count_partitions(g, PartitionKind::monopolar, 4) != 3) return std::nullopt;
    std::vector<int> right_terminals;
    for (const auto& p : search_all_partitions(g, PartitionKind::monopolar)) {
      if (!p.is_right(hub)) return std::nullopt;
      for (int j = 0; j < 3; ++j)
        if (p.is_right(terminals[static_cast<std::size_t>(j)])) right_terminals.push_back(j);
    }
    std::sort(right_terminals.begin(), right_terminals.end());
    if (right_terminals != std::vector<int>{0, 1, 2}) return std::nullopt;
    auto orientation = find_transitive_orientation(g, terminal_set(order_));
    if (!orientation) return std::nullopt;
    ClauseGadget candidate{g, terminals, hub, *orientation};
    if (!check_clause_gadget(candidate).ok()) return std::nullopt;
    return candidate;
  }

  std::size_t k_;
  std::size_t order_;
  std::vector<std::vector<ConnectorChoice>> options_;
};

}  // namespace synthesis

/// Searches for a certified clause gadget on at most max_n vertices. The
/// candidate family is two copies of Q (the u-vertex of the first is the hub,
/// adjacent to t1, t2, t3) plus connector vertices, tried in increasing
/// number; each connector attaches to at most one terminal, optionally to the
/// second copy's u-vertex, and to any earlier connectors. Seed 0 enumerates
/// in code order; other seeds shuffle the per-connector order. Deterministic
/// for a given (max_n, seed).
inline ClauseGadget synthesize_clause_gadget(std::size_t max_n = 18, std::uint64_t seed = 0) {
  if (max_n > default_max_brute) throw CapacityError("gadget synthesis is limited to 22 vertices");
  for (std::size_t k = 0; synthesis::base_order + k <= max_n; ++k)
    if (auto found = synthesis::Search(k, seed).run()) return *found;
  throw SynthesisError("no gadget found within bounds (max_n=" + std::to_string(max_n) + ")");
}

// ---------------------------------------------------------------------------
// Bundle file: DIMACS edge section, terminal and hub lines, orientation.

inline std::string write_gadget_bundle(const ClauseGadget& gadget) {
  std::ostringstream out;
  out << "c polaritylab clause gadget\n";
  out << "p edge " << gadget.graph.order() << ' ' << gadget.graph.edge_count() << '\n';
  for (auto [u, v] : gadget.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (int j = 0; j < 3; ++j) out << "t " << j + 1 << ' ' << gadget.terminals[static_cast<std::size_t>(j)] + 1 << '\n';
  out << "hub " << gadget.hub + 1 << '\n';
  out << write_orientation(gadget.orientation);
  return out.str();
}

/// Parses a bundle and re-verifies the contract. Throws ParseError for
/// malformed text and ContractViolation when the content fails G1..G5
/// (including arcs that do not match the edge list, reported as G3).
inline CertifiedGadget read_gadget_bundle(std::string_view input) {
  auto lines = text::lines(input);
  std::size_t pos = 0;
  Graph g = detail::parse_edge_section(lines, pos);
  const auto n = static_cast<long long>(g.order());

  std::array<std::optional<Vertex>, 3> terminals;
  std::optional<Vertex> hub;
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    const std::size_t ln = pos + 1;
    if (toks[0] == "t") {
      if (toks.size() != 3) throw ParseError(ln, "expected 't <position> <vertex>'");
      auto position = text::expect_int(toks[1], ln, "terminal position");
      auto v = text::expect_int(toks[2], ln, "vertex");
      if (position < 1 || position > 3) throw ParseError(ln, "terminal position must be 1, 2 or 3");
      if (v < 1 || v > n) throw ParseError(ln, "terminal vertex out of range");
      if (terminals[static_cast<std::size_t>(position - 1)]) throw ParseError(ln, "terminal given twice");
      terminals[static_cast<std::size_t>(position - 1)] = static_cast<Vertex>(v - 1);
    } else if (toks[0] == "hub") {
      if (toks.size() != 2) throw ParseError(ln, "expected 'hub <vertex>'");
      auto v = text::expect_int(toks[1], ln, "vertex");
      if (v < 1 || v > n) throw ParseError(ln, "hub vertex out of range");
      if (hub) throw ParseError(ln, "hub given twice");
      hub = static_cast<Vertex>(v - 1);
    } else {
      break;
    }
  }
  for (int j = 0; j < 3; ++j)
    if (!terminals[static_cast<std::size_t>(j)]) throw ParseError(0, "missing terminal " + std::to_string(j + 1));
  if (!hub) throw ParseError(0, "missing hub line");

  auto arcs = detail::parse_orient_section(lines, pos);
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (!toks.empty() && !text::is_comment(toks)) throw ParseError(pos + 1, "unexpected line after orientation");
  }
  if (arcs.n != g.order()) throw ParseError(0, "orientation and graph have different vertex counts");

  ClauseGadget gadget{g, {*terminals[0], *terminals[1], *terminals[2]}, *hub, {}};
  try {
    gadget.orientation = Orientation::make(g, arcs.arcs);
  } catch (const GraphError& e) {
    throw ContractViolation(GadgetCheck::g3_terminal_sinks, std::string("orientation does not match the graph: ") + e.what());
  }
  return CertifiedGadget::certify(std::move(gadget));
}

// ---------------------------------------------------------------------------
// Shipped gadget: the first result of synthesize_clause_gadget(18, 0).

/// The shipped clause gadget (18 vertices), certified on first use.
inline const CertifiedGadget& default_clause_gadget() {
  static const CertifiedGadget gadget = [] {
    // 1-based, as in the bundle file.
    static constexpr std::array<std::array<int, 2>, 25> edges = {{
        {1, 2},   {1, 3},   {1, 4},   {2, 3},   {2, 4},   {3, 5},   {4, 5},   {5, 11},  {5, 12},
        {5, 13},  {6, 7},   {6, 8},   {6, 9},   {7, 8},   {7, 9},   {8, 10},  {9, 10},  {10, 14},
        {10, 17}, {11, 15}, {12, 16}, {13, 17}, {14, 18}, {15, 18}, {16, 18},
    }};
    static constexpr std::array<std::array<int, 2>, 25> arcs = {{
        {1, 2},  {1, 3},  {1, 4},   {2, 3},   {2, 4},   {5, 3},   {5, 4},   {5, 11},  {5, 12},
        {5, 13}, {6, 7},  {8, 6},   {8, 7},   {8, 10},  {9, 6},   {9, 7},   {9, 10},  {14, 10},
        {14, 18}, {15, 11}, {15, 18}, {16, 12}, {16, 18}, {17, 10}, {17, 13},
    }};
    GraphBuilder b(18);
    for (auto [u, v] : edges) b.add_edge(u - 1, v - 1);
    b.set_labels(synthesis::labels(5));
    Graph g = b.build();
    std::vector<Arc> oriented;
    for (auto [u, v] : arcs) oriented.emplace_back(u - 1, v - 1);
    Orientation o = Orientation::make(g, oriented);
    return CertifiedGadget::certify(ClauseGadget{g, synthesis::terminals, synthesis::hub, o});
  }();
  return gadget;
}

}  // namespace polaritylab

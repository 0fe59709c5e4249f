#pragma once

// Command-line front end. run() takes explicit streams so tests can drive it
// in-process; tools/polaritylab.cpp only forwards main's arguments.
//
// Exit codes: 0 yes/success, 1 no/contract violation, 2 usage, parse,
// capacity or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polaritylab/acceptance.hpp"
#include "polaritylab/brute.hpp"
#include "polaritylab/comparability.hpp"
#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/formula.hpp"
#include "polaritylab/gadget.hpp"
#include "polaritylab/partition.hpp"
#include "polaritylab/reduction.hpp"
#include "polaritylab/solver.hpp"

namespace polaritylab::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) throw IoError("cannot write '" + path + "'");
}

struct SolveArgs {
  std::string problem;
  std::string input;
  bool brute = false;
  bool enumerate = false;
  bool quiet = false;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err, const acceptance::SolverSuite& suite) {
  const PartitionKind kind = *parse_kind(a.problem);
  const Graph g = read_dimacs_graph(read_file(a.input));
  if (a.enumerate) {
    if (kind != PartitionKind::monopolar) {
      err << "error: --enumerate is only available for monopolar\n";
      return exit_error;
    }
    const auto all = a.brute ? enumerate_monopolar(g) : search_all_partitions(g, kind);
    if (!a.quiet) {
      for (const auto& p : all) out << write_partition(p);
      out << "count: " << all.size() << '\n';
    }
    return all.empty() ? exit_no : exit_yes;
  }
  std::optional<Partition> p;
  if (a.brute) {
    p = brute_solve(g, kind);
  } else {
    switch (kind) {
      case PartitionKind::monopolar: p = suite.monopolar(g); break;
      case PartitionKind::polar: p = suite.polar(g); break;
      case PartitionKind::unipolar: p = suite.unipolar(g); break;
    }
  }
  if (!p) {
    if (!a.quiet) out << "NONE\n";
    return exit_no;
  }
  if (!a.quiet) out << write_partition(*p);
  return exit_yes;
}

inline int cmd_recognize(const std::string& check, const std::string& input, std::ostream& out) {
  const Graph g = read_dimacs_graph(read_file(input));
  if (check == "k4free") {
    const bool ok = !has_k4(g);
    out << "k4free: " << (ok ? "yes" : "no") << '\n';
    return ok ? exit_yes : exit_no;
  }
  std::optional<Orientation> o;
  if (check == "comparability" || !has_k4(g)) o = find_transitive_orientation(g);
  out << check << ": " << (o ? "yes" : "no") << '\n';
  if (!o) return exit_no;
  out << write_orientation(*o);
  return exit_yes;
}

struct ReduceArgs {
  std::string cnf;
  std::string graph_out;
  std::string map_out;
  bool doubled = false;
};

inline int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Formula f = parse_formula(read_file(a.cnf));
  const LabeledReduction r = build_reduction(f, default_clause_gadget());
  std::string map = write_reduction_map(r);
  Graph g = r.graph;
  if (a.doubled) {
    map = "c second copy: add " + std::to_string(g.order()) + " to every vertex\n" + map;
    g = double_graph(g);
  }
  write_file(a.graph_out, write_dimacs_graph(g));
  write_file(a.map_out, map);
  out << "vertices: " << g.order() << "\nedges: " << g.edge_count() << '\n';
  return exit_yes;
}

struct GadgetArgs {
  std::string action;
  std::string bundle;
  std::size_t max_n = 18;
  std::uint64_t seed = 0;
};

inline void print_gadget(const ClauseGadget& gadget, std::ostream& out) {
  for (std::size_t j = 0; j < 3; ++j) out << "t " << j + 1 << ' ' << gadget.terminals[j] + 1 << '\n';
  out << "hub " << gadget.hub + 1 << '\n';
  out << write_orientation(gadget.orientation);
}

inline int cmd_gadget(const GadgetArgs& a, std::ostream& out, std::ostream& err) {
  try {
    if (a.action == "synth") {
      const ClauseGadget gadget = synthesize_clause_gadget(a.max_n, a.seed);
      write_file(a.bundle, write_gadget_bundle(gadget));
      out << "vertices: " << gadget.graph.order() << "\nedges: " << gadget.graph.edge_count() << '\n';
      return exit_yes;
    }
    const CertifiedGadget gadget = read_gadget_bundle(read_file(a.bundle));
    if (a.action == "show") {
      print_gadget(gadget.gadget(), out);
      return exit_yes;
    }
    const auto& cert = gadget.certificate();
    for (std::size_t i = 0; i < cert.partitions.size(); ++i) {
      out << "right terminal: t" << cert.right_terminal_of[i] + 1 << '\n';
      out << write_partition(cert.partitions[i]);
    }
    out << "partitions: " << cert.partitions.size() << '\n';
    return exit_yes;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return exit_no;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << '\n';
    return exit_no;
  }
}

struct SelftestArgs {
  std::size_t max_n = 6;
  std::size_t formulas = 200;
  std::uint64_t seed = 1;
};

inline int cmd_selftest(const SelftestArgs& a, std::ostream& out, std::ostream& err, const acceptance::SolverSuite& suite) {
  if (a.max_n > 8) throw CapacityError("selftest --max-n is limited to 8");
  acceptance::Config c;
  c.max_n = a.max_n;
  c.random_formulas = a.formulas;
  c.seed = a.seed;
  std::vector<int> failed;
  acceptance::run_all(c, suite, [&](const acceptance::Result& r) {
    out << acceptance::format(r) << '\n';
    if (!r.passed()) failed.push_back(r.id);
  });
  out << "passed: " << 9 - failed.size() << "/9\n";
  if (failed.empty()) return exit_yes;
  err << "failed criteria:";
  for (int id : failed) err << ' ' << id;
  err << '\n';
  return exit_no;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               const acceptance::SolverSuite& suite = {}) {
  CLI::App app{"Polar, monopolar and unipolar partitions of comparability graphs"};
  app.name("polaritylab");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "find a partition of a DIMACS graph");
  solve_cmd->add_option("problem", solve.problem, "monopolar | polar | unipolar")
      ->required()
      ->check(CLI::IsMember({"monopolar", "polar", "unipolar"}));
  solve_cmd->add_option("input", solve.input, "DIMACS edge file")->required();
  solve_cmd->add_flag("--brute", solve.brute, "use the exhaustive scan");
  solve_cmd->add_flag("--enumerate", solve.enumerate, "list every monopolar partition and the count");
  solve_cmd->add_flag("--quiet", solve.quiet, "report through the exit code only");

  std::string check, recognize_input;
  auto* recognize_cmd = app.add_subcommand("recognize", "test a graph property");
  recognize_cmd->add_option("check", check, "comparability | k4free | 3cc")
      ->required()
      ->check(CLI::IsMember({"comparability", "k4free", "3cc"}));
  recognize_cmd->add_option("input", recognize_input, "DIMACS edge file")->required();

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "build the reduction graph of a positive 3-CNF formula");
  reduce_cmd->add_option("cnf", reduce.cnf, "DIMACS CNF file")->required();
  reduce_cmd->add_option("out-graph", reduce.graph_out, "DIMACS edge output")->required();
  reduce_cmd->add_option("out-map", reduce.map_out, "vertex mapping output")->required();
  reduce_cmd->add_flag("--double", reduce.doubled, "write two disjoint copies of the graph");

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "synthesize, verify or show a clause gadget bundle");
  gadget_cmd->add_option("action", gadget.action, "synth | verify | show")
      ->required()
      ->check(CLI::IsMember({"synth", "verify", "show"}));
  gadget_cmd->add_option("bundle", gadget.bundle, "gadget bundle file")->required();
  gadget_cmd->add_option("--max-n", gadget.max_n, "vertex bound for synth")->capture_default_str();
  gadget_cmd->add_option("--seed", gadget.seed, "search order seed for synth")->capture_default_str();

  SelftestArgs selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->add_option("--max-n", selftest.max_n, "largest exhaustive graph order")->capture_default_str();
  selftest_cmd->add_option("--formulas", selftest.formulas, "number of random formulas")->capture_default_str();
  selftest_cmd->add_option("--seed", selftest.seed, "seed for random corpora")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_error;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err, suite);
    if (*recognize_cmd) return cmd_recognize(check, recognize_input, out);
    if (*reduce_cmd) return cmd_reduce(reduce, out);
    if (*gadget_cmd) return cmd_gadget(gadget, out, err);
    if (*selftest_cmd) return cmd_selftest(selftest, out, err, suite);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

}  // namespace polaritylab::cli

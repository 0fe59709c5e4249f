#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"

namespace polaritylab {

using Clause = std::array<int, 3>;  // 1-based variable indices, pairwise distinct

/// Positive 3-CNF: every clause has three distinct, non-negated variables.
struct Formula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws PreconditionError when a clause breaks the invariants.
  static Formula make(std::size_t num_vars, std::vector<Clause> clauses) {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const auto& c = clauses[i];
      for (int v : c)
        if (v < 1 || static_cast<std::size_t>(v) > num_vars)
          throw PreconditionError("clause " + std::to_string(i + 1) + " uses variable " + std::to_string(v) +
                                  " outside 1.." + std::to_string(num_vars));
      if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
        throw PreconditionError("repeated variable in clause " + std::to_string(i + 1));
    }
    return Formula{num_vars, std::move(clauses)};
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

struct Assignment {
  std::vector<bool> values;  // values[i] is variable i+1

  bool operator[](int var) const { return values.at(static_cast<std::size_t>(var - 1)); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Restricted DIMACS CNF: "p cnf n m", then m lines each holding exactly
/// three distinct positive literals followed by 0.
inline Formula parse_formula(std::string_view input) {
  auto lines = text::lines(input);
  std::optional<std::size_t> declared_clauses;
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  std::size_t last = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = text::tokens(lines[i]);
    if (toks.empty() || text::is_comment(toks)) continue;
    const std::size_t ln = i + 1;
    last = ln;
    if (toks[0] == "p") {
      if (declared_clauses) throw ParseError(ln, "second header line");
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(ln, "expected header 'p cnf <n> <m>'");
      auto n = text::expect_int(toks[2], ln, "variable count");
      auto m = text::expect_int(toks[3], ln, "clause count");
      if (n < 0 || m < 0) throw ParseError(ln, "negative count in header");
      num_vars = static_cast<std::size_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!declared_clauses) throw ParseError(ln, "clause before header 'p cnf <n> <m>'");
    std::vector<long long> lits;
    for (auto tok : toks) lits.push_back(text::expect_int(tok, ln, "literal"));
    if (lits.back() != 0) throw ParseError(ln, "clause must end with 0");
    lits.pop_back();
    for (long long lit : lits) {
      if (lit == 0) throw ParseError(ln, "0 inside clause");
      if (lit < 0) throw ParseError(ln, "negated literal not allowed");
      if (static_cast<std::size_t>(lit) > num_vars)
        throw ParseError(ln, "variable " + std::to_string(lit) + " exceeds declared " + std::to_string(num_vars));
    }
    if (lits.size() != 3) throw ParseError(ln, "clause has " + std::to_string(lits.size()) + " literals, expected 3");
    if (lits[0] == lits[1] || lits[0] == lits[2] || lits[1] == lits[2]) throw ParseError(ln, "repeated variable in clause");
    clauses.push_back({static_cast<int>(lits[0]), static_cast<int>(lits[1]), static_cast<int>(lits[2])});
  }
  if (!declared_clauses) throw ParseError(0, "missing header 'p cnf <n> <m>'");
  if (clauses.size() != *declared_clauses)
    throw ParseError(last, "header declares " + std::to_string(*declared_clauses) + " clauses but " +
                               std::to_string(clauses.size()) + " were given");
  return Formula{num_vars, std::move(clauses)};
}

inline std::string write_formula(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

/// Every clause has exactly one true variable. Throws PreconditionError when
/// the assignment length differs from num_vars.
inline bool check_1in3(const Formula& f, const Assignment& a) {
  if (a.values.size() != f.num_vars)
    throw PreconditionError("assignment has " + std::to_string(a.values.size()) + " values for " +
                            std::to_string(f.num_vars) + " variables");
  for (const auto& c : f.clauses)
    if (a[c[0]] + a[c[1]] + a[c[2]] != 1) return false;
  return true;
}

inline constexpr std::size_t max_brute_vars = 24;

/// Least satisfying 1-in-3 assignment by exhaustive scan, comparing
/// assignments by their sorted lists of true variables (so {1} < {1,2} < {2}).
inline std::optional<Assignment> brute_force_1in3(const Formula& f) {
  if (f.num_vars > max_brute_vars)
    throw CapacityError("1-in-3 brute force is limited to " + std::to_string(max_brute_vars) + " variables");
  std::vector<std::uint32_t> clause_masks;
  for (const auto& c : f.clauses)
    clause_masks.push_back((1u << (c[0] - 1)) | (1u << (c[1] - 1)) | (1u << (c[2] - 1)));
  auto less = [](std::uint32_t a, std::uint32_t b) {
    while (a && b) {
      auto x = std::countr_zero(a);
      auto y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  };
  std::optional<std::uint32_t> best;
  const std::uint32_t count = 1u << f.num_vars;
  for (std::uint32_t m = 0; m < count; ++m) {
    bool ok = true;
    for (auto cm : clause_masks)
      if (std::popcount(cm & m) != 1) {
        ok = false;
        break;
      }
    if (ok && (!best || less(m, *best))) best = m;
  }
  if (!best) return std::nullopt;
  Assignment a{std::vector<bool>(f.num_vars)};
  for (std::size_t i = 0; i < f.num_vars; ++i) a.values[i] = (*best >> i) & 1u;
  return a;
}

}  // namespace polaritylab

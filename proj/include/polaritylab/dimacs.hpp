#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/errors.hpp"
#include "polaritylab/graph.hpp"

namespace polaritylab {

namespace text {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

inline long long expect_int(std::string_view tok, std::size_t line, const char* what) {
  auto v = to_int(tok);
  if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  return *v;
}

/// Splits text into lines; the line number of element i is i+1.
inline std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline bool is_comment(const std::vector<std::string_view>& toks) { return !toks.empty() && toks[0] == "c"; }

}  // namespace text

namespace detail {

/// Parses a DIMACS edge section starting at lines[pos]. Leaves pos at the
/// first line after the last edge. Comment lines before the header are
/// skipped; blank lines are ignored throughout.
inline Graph parse_edge_section(const std::vector<std::string>& lines, std::size_t& pos) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  for (; pos < lines.size() && !have_header; ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    const std::size_t ln = pos + 1;
    if (toks[0] != "p" || toks.size() != 4 || toks[1] != "edge")
      throw ParseError(ln, "expected header 'p edge <n> <m>'");
    auto nv = text::expect_int(toks[2], ln, "vertex count");
    auto mv = text::expect_int(toks[3], ln, "edge count");
    if (nv < 0 || mv < 0) throw ParseError(ln, "negative count in header");
    n = static_cast<std::size_t>(nv);
    m = static_cast<std::size_t>(mv);
    have_header = true;
  }
  if (!have_header) throw ParseError(0, "missing header 'p edge <n> <m>'");

  GraphBuilder b(n);
  std::size_t seen = 0;
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    if (toks[0] != "e") break;
    const std::size_t ln = pos + 1;
    if (toks.size() != 3) throw ParseError(ln, "expected 'e <u> <v>'");
    auto u = text::expect_int(toks[1], ln, "endpoint");
    auto v = text::expect_int(toks[2], ln, "endpoint");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
      throw ParseError(ln, "endpoint out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(ln, "self-loop on vertex " + std::to_string(u));
    b.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    ++seen;
  }
  if (seen != m)
    throw ParseError(pos < lines.size() ? pos + 1 : 0,
                     "header declares " + std::to_string(m) + " edges but " + std::to_string(seen) + " were given");
  return b.build();
}

}  // namespace detail

/// Reads the DIMACS edge format: optional "c" comments, "p edge n m", then m
/// lines "e u v" with 1-based endpoints. Anything after the edges is an error.
inline Graph read_dimacs_graph(std::string_view input) {
  auto lines = text::lines(input);
  std::size_t pos = 0;
  Graph g = detail::parse_edge_section(lines, pos);
  for (; pos < lines.size(); ++pos) {
    auto toks = text::tokens(lines[pos]);
    if (toks.empty() || text::is_comment(toks)) continue;
    throw ParseError(pos + 1, "unexpected line after edge list");
  }
  return g;
}

/// Canonical form: one comment line, the header, then edges sorted
/// lexicographically with 1-based endpoints.
inline std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "c polaritylab graph\n";
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace polaritylab

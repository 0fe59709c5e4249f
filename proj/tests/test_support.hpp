#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "polaritylab.hpp"

namespace polaritylab::testing {

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet::of(n, members); }

inline std::string data_file(const std::string& name) {
  std::ifstream in(std::string(POLARITYLAB_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(POLARITYLAB_DATA_DIR) + "/" + name; }

/// Vertex of Q by its label.
inline Vertex q(const Graph& g, const std::string& label) { return *g.find_label(label); }

}  // namespace polaritylab::testing

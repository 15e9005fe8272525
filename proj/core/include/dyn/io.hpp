// Graph file format: a JSON document with an ordered `vertices` label list,
// `edges` as [from, to] label pairs, `tokens` as a label -> count map
// (labels with zero tokens may be omitted), and an optional `roles` block
// mapping every label to a reduction role. Parse/serialize round-trips are
// lossless.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyn/digraph.hpp"
#include "dyn/reduction.hpp"

namespace dyn {

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphFile {
  Digraph graph;
  Position tokens;
  std::optional<std::vector<VertexRole>> roles;
};

GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_file_from_string(const std::string& text);
GraphFile load_graph_file(const std::string& path);

std::string write_graph_file(const GraphFile& gf);
void save_graph_file(const GraphFile& gf, const std::string& path);

}  // namespace dyn

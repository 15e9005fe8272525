#include "dyn/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace dyn {

namespace {

using json = nlohmann::ordered_json;

int resolve_label(const std::unordered_map<std::string, int>& index, const json& value,
                  const char* where) {
  if (!value.is_string()) {
    throw FileFormatError(std::string(where) + ": expected a vertex label string");
  }
  const auto it = index.find(value.get<std::string>());
  if (it == index.end()) {
    throw FileFormatError(std::string(where) + ": unknown vertex label '" +
                          value.get<std::string>() + "'");
  }
  return it->second;
}

}  // namespace

GraphFile read_graph_file_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FileFormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FileFormatError("top level must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "vertices" && key != "edges" && key != "tokens" && key != "roles") {
      throw FileFormatError("unknown field '" + key + "'");
    }
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw FileFormatError("missing 'vertices' array");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw FileFormatError("missing 'edges' array");
  }
  if (!j.contains("tokens") || !j["tokens"].is_object()) {
    throw FileFormatError("missing 'tokens' object");
  }

  GraphFile gf;
  std::unordered_map<std::string, int> index;
  for (const auto& entry : j["vertices"]) {
    if (!entry.is_string()) throw FileFormatError("vertex labels must be strings");
    const std::string label = entry.get<std::string>();
    if (label.empty()) throw FileFormatError("vertex labels must be nonempty");
    if (index.contains(label)) throw FileFormatError("duplicate vertex label '" + label + "'");
    index.emplace(label, gf.graph.add_vertex(label));
  }
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 2) {
      throw FileFormatError("edges must be [from, to] label pairs");
    }
    gf.graph.add_edge(resolve_label(index, entry[0], "edge"),
                      resolve_label(index, entry[1], "edge"));
  }
  gf.tokens.assign(gf.graph.vertex_count(), 0);
  for (const auto& [label, value] : j["tokens"].items()) {
    const auto it = index.find(label);
    if (it == index.end()) throw FileFormatError("tokens: unknown vertex label '" + label + "'");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw FileFormatError("tokens: count for '" + label + "' must be a non-negative integer");
    }
    gf.tokens[static_cast<std::size_t>(it->second)] = value.get<std::int64_t>();
  }
  if (j.contains("roles")) {
    if (!j["roles"].is_object()) throw FileFormatError("'roles' must be an object");
    std::vector<VertexRole> roles(gf.graph.vertex_count());
    std::vector<bool> seen(gf.graph.vertex_count(), false);
    for (const auto& [label, value] : j["roles"].items()) {
      const auto it = index.find(label);
      if (it == index.end()) throw FileFormatError("roles: unknown vertex label '" + label + "'");
      if (!value.is_string()) throw FileFormatError("roles: role for '" + label + "' must be a string");
      const auto role = role_from_string(value.get<std::string>());
      if (!role) {
        throw FileFormatError("roles: unrecognized role '" + value.get<std::string>() + "'");
      }
      roles[static_cast<std::size_t>(it->second)] = *role;
      seen[static_cast<std::size_t>(it->second)] = true;
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (!seen[v]) throw FileFormatError("roles: no role for vertex '" + gf.graph.label(static_cast<int>(v)) + "'");
    }
    gf.roles = std::move(roles);
  }
  return gf;
}

GraphFile read_graph_file(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_graph_file_from_string(buffer.str());
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  return read_graph_file(in);
}

std::string write_graph_file(const GraphFile& gf) {
  const Digraph& g = gf.graph;
  if (gf.tokens.size() != g.vertex_count()) {
    throw std::invalid_argument("token vector length differs from vertex count");
  }
  if (gf.roles && gf.roles->size() != g.vertex_count()) {
    throw std::invalid_argument("role vector length differs from vertex count");
  }
  json j;
  j["vertices"] = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(static_cast<int>(v)));
  j["edges"] = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.out_neighbors(static_cast<int>(v))) {
      j["edges"].push_back(json::array({g.label(static_cast<int>(v)), g.label(u)}));
    }
  }
  j["tokens"] = json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (gf.tokens[v] != 0) j["tokens"][g.label(static_cast<int>(v))] = gf.tokens[v];
  }
  if (gf.roles) {
    j["roles"] = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      j["roles"][g.label(static_cast<int>(v))] = role_to_string((*gf.roles)[v]);
    }
  }
  return j.dump(2) + "\n";
}

void save_graph_file(const GraphFile& gf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
  out << write_graph_file(gf);
  if (!out) throw FileFormatError("failed writing '" + path + "'");
}

}  // namespace dyn

#include "dyn/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dyn {

Digraph::Digraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex();
}

Digraph::Digraph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : Digraph(n) {
  for (auto [from, to] : edges) add_edge(from, to);
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : out_adj_) total += adj.size();
  return total;
}

int Digraph::add_vertex(std::string label) {
  const int idx = static_cast<int>(out_adj_.size());
  out_adj_.emplace_back();
  if (label.empty()) label = "v" + std::to_string(idx + 1);
  labels_.push_back(std::move(label));
  return idx;
}

void Digraph::add_edge(int from, int to) {
  if (from < 0 || to < 0 || from >= static_cast<int>(vertex_count()) ||
      to >= static_cast<int>(vertex_count())) {
    throw std::out_of_range("edge endpoint out of range");
  }
  out_adj_[static_cast<std::size_t>(from)].push_back(to);
}

bool Digraph::has_edge(int from, int to) const {
  const auto& adj = out_adj_.at(from);
  return std::find(adj.begin(), adj.end(), to) != adj.end();
}

std::optional<int> Digraph::vertex_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

ValidationReport validate_graph(const Digraph& g) {
  ValidationReport report;
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v) {
    std::unordered_set<int> seen;
    for (int u : g.out_neighbors(v)) {
      if (u < 0 || u >= n) {
        report.issues.push_back("edge (" + std::to_string(v) + "," + std::to_string(u) +
                                "): target out of range");
        continue;
      }
      if (u == v) {
        report.issues.push_back("self-loop at vertex " + g.label(v));
      }
      if (!seen.insert(u).second) {
        report.issues.push_back("parallel edge (" + g.label(v) + "," + g.label(u) + ")");
      }
    }
  }
  return report;
}

TokenCount total_tokens(const Position& p) {
  return std::accumulate(p.begin(), p.end(), TokenCount{0});
}

std::vector<std::pair<Move, Position>> dyn_moves(const Digraph& g, const Position& p) {
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("position length does not match vertex count");
  }
  std::vector<std::pair<Move, Position>> out;
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v) {
    const TokenCount have = p[static_cast<std::size_t>(v)];
    const TokenCount min_take = g.out_degree(v) + 1;
    if (have < min_take) continue;
    Position base = p;
    for (int u : g.out_neighbors(v)) base[static_cast<std::size_t>(u)] += 1;
    for (TokenCount r = min_take; r <= have; ++r) {
      Position q = base;
      q[static_cast<std::size_t>(v)] = have - r;
      out.emplace_back(Move{v, r}, std::move(q));
    }
  }
  return out;
}

DynRules::DynRules(Digraph g) : graph_(std::move(g)) {
  const ValidationReport report = validate_graph(graph_);
  if (!report.ok()) {
    throw std::invalid_argument("invalid digraph: " + report.issues.front());
  }
}

std::vector<Position> DynRules::options(const Position& pos) const {
  std::vector<Position> out;
  std::unordered_set<Position, PositionHash> seen;
  for (auto& [move, succ] : dyn_moves(graph_, pos)) {
    if (seen.insert(succ).second) out.push_back(std::move(succ));
  }
  return out;
}

std::int64_t DynRules::measure(const Position& pos) const { return total_tokens(pos); }

ValidationReport validate_g4_partition(const Digraph& g, const G4Partition& part) {
  ValidationReport report;
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  for (int v : part.v1) {
    if (v < 0 || v >= n) {
      report.issues.push_back("V1 index out of range: " + std::to_string(v));
      return report;
    }
    owner[static_cast<std::size_t>(v)] += 1;
  }
  for (int w : part.w1) {
    if (w < 0 || w >= n) {
      report.issues.push_back("W1 index out of range: " + std::to_string(w));
      return report;
    }
    owner[static_cast<std::size_t>(w)] += 2;
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] == 0) {
      report.issues.push_back("vertex " + g.label(v) + " belongs to neither V1 nor W1");
    } else if (owner[static_cast<std::size_t>(v)] > 2) {
      report.issues.push_back("vertex " + g.label(v) + " assigned twice");
    }
  }
  for (int w : part.w1) {
    if (!g.is_sink(w)) report.issues.push_back("W1 vertex " + g.label(w) + " is not a sink");
  }
  for (int v : part.v1) {
    for (int w : part.w1) {
      if (!g.has_edge(v, w)) {
        report.issues.push_back("missing edge (" + g.label(v) + "," + g.label(w) + ")");
      }
    }
  }
  return report;
}

Position project_v1(const G4Partition& part, const Position& full) {
  Position out;
  out.reserve(part.v1.size());
  for (int v : part.v1) out.push_back(full.at(static_cast<std::size_t>(v)));
  return out;
}

AuxRules::AuxRules(Digraph g, G4Partition part) : graph_(std::move(g)), part_(std::move(part)) {
  const ValidationReport report = validate_g4_partition(graph_, part_);
  if (!report.ok()) {
    throw std::invalid_argument("invalid G4 partition: " + report.issues.front());
  }
  std::vector<int> slot_of(graph_.vertex_count(), -1);
  for (std::size_t i = 0; i < part_.v1.size(); ++i) {
    slot_of[static_cast<std::size_t>(part_.v1[i])] = static_cast<int>(i);
  }
  for (int v : part_.v1) {
    full_out_degree_.push_back(graph_.out_degree(v));
    std::vector<int> targets;
    for (int u : graph_.out_neighbors(v)) {
      if (const int slot = slot_of[static_cast<std::size_t>(u)]; slot >= 0) {
        targets.push_back(slot);
      }
    }
    v1_out_.push_back(std::move(targets));
  }
}

std::vector<Position> AuxRules::options(const Position& pos) const {
  if (pos.size() != part_.v1.size()) {
    throw std::invalid_argument("auxiliary position length does not match |V1|");
  }
  std::vector<Position> out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const TokenCount have = pos[i];
    const TokenCount min_take = full_out_degree_[i] + 1;
    if (have < min_take) continue;
    Position base = pos;
    for (int slot : v1_out_[i]) base[static_cast<std::size_t>(slot)] += 1;
    for (TokenCount r = min_take; r <= have; ++r) {
      Position q = base;
      q[i] = have - r;
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::int64_t AuxRules::measure(const Position& pos) const { return total_tokens(pos); }

Outcome aux_outcome(const Digraph& g, const G4Partition& part, const Position& v1_tokens,
                    const SolveLimits& limits) {
  const AuxRules rules(g, part);
  return outcome(rules, v1_tokens, limits);
}

}  // namespace dyn

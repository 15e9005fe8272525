// Digraph data model and Digraph Yama Nim move generation. A move at vertex v
// takes at least d_out(v) + 1 tokens from v and adds one token to every
// out-neighbor of v.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dyn/game_core.hpp"

namespace dyn {

// Vertex-labelled digraph with ordered out-adjacency. Construction does not
// enforce simplicity so that loaded files can be inspected; validate_graph
// reports self-loops, parallel edges and out-of-range indices.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  Digraph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  std::size_t vertex_count() const { return out_adj_.size(); }
  std::size_t edge_count() const;

  // Returns the new vertex index. Empty label defaults to "v<index+1>".
  int add_vertex(std::string label = "");
  void add_edge(int from, int to);

  const std::vector<int>& out_neighbors(int v) const { return out_adj_.at(v); }
  int out_degree(int v) const { return static_cast<int>(out_adj_.at(v).size()); }
  bool has_edge(int from, int to) const;
  bool is_sink(int v) const { return out_degree(v) == 0; }

  const std::string& label(int v) const { return labels_.at(v); }
  void set_label(int v, std::string label) { labels_.at(v) = std::move(label); }
  std::optional<int> vertex_by_label(const std::string& label) const;

 private:
  std::vector<std::vector<int>> out_adj_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Accepts exactly the simple digraphs: indices in range, no self-loops, no
// parallel edges.
ValidationReport validate_graph(const Digraph& g);

struct Move {
  int vertex = 0;
  TokenCount removed = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Move& m) {
  return os << "take " << m.removed << " at vertex " << m.vertex;
}

TokenCount total_tokens(const Position& p);

// Every legal move with its successor, vertex index ascending then removal
// amount ascending. Distinct moves always reach distinct successors.
std::vector<std::pair<Move, Position>> dyn_moves(const Digraph& g, const Position& p);

// Digraph Yama Nim on a fixed graph; measure is the total token count (each
// move removes at least d_out + 1 and deposits exactly d_out).
class DynRules final : public GameRules {
 public:
  explicit DynRules(Digraph g);

  std::vector<Position> options(const Position& pos) const override;
  std::int64_t measure(const Position& pos) const override;

  const Digraph& graph() const { return graph_; }

 private:
  Digraph graph_;
};

// Partition of a graph into V1 and a set W1 of sinks such that every V1
// vertex has an edge to every W1 vertex. Index lists are kept sorted.
struct G4Partition {
  std::vector<int> v1;
  std::vector<int> w1;
};

ValidationReport validate_g4_partition(const Digraph& g, const G4Partition& part);

// The V1 coordinates of a full position, in v1 order.
Position project_v1(const G4Partition& part, const Position& full);

// Auxiliary ruleset for the even-|W1| analysis: positions carry V1
// coordinates only; a move at v in V1 removes at least d_out(v) + 1 tokens
// where d_out counts the full graph (W1 edges included), and deposits go to
// V1 out-neighbors only.
class AuxRules final : public GameRules {
 public:
  AuxRules(Digraph g, G4Partition part);

  std::vector<Position> options(const Position& pos) const override;
  std::int64_t measure(const Position& pos) const override;

  const G4Partition& partition() const { return part_; }

 private:
  Digraph graph_;
  G4Partition part_;
  std::vector<int> full_out_degree_;       // per V1 slot
  std::vector<std::vector<int>> v1_out_;   // per V1 slot: out-neighbor V1 slots
};

Outcome aux_outcome(const Digraph& g, const G4Partition& part, const Position& v1_tokens,
                    const SolveLimits& limits = {});

}  // namespace dyn

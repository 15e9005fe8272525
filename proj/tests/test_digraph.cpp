#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dyn/digraph.hpp"

using namespace dyn;

namespace {

// Independent successor generator, phrased over final counts at the chosen
// vertex rather than removal amounts.
std::set<Position> naive_successors(const Digraph& g, const Position& p) {
  std::set<Position> out;
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v) {
    const TokenCount ceiling = p[static_cast<std::size_t>(v)] - g.out_degree(v);
    for (TokenCount final_count = 0; final_count < ceiling; ++final_count) {
      Position q = p;
      q[static_cast<std::size_t>(v)] = final_count;
      for (int u : g.out_neighbors(v)) q[static_cast<std::size_t>(u)] += 1;
      out.insert(std::move(q));
    }
  }
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> size_dist(1, max_vertices);
  std::bernoulli_distribution edge(0.5);
  const int n = size_dist(rng);
  Digraph g(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && edge(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("validate_graph accepts simple digraphs and reports violations") {
  CHECK(validate_graph(Digraph(2, {{0, 1}, {1, 0}})).ok());
  CHECK(validate_graph(Digraph(1)).ok());

  Digraph self_loop(2);
  self_loop.add_edge(0, 0);
  const auto loop_report = validate_graph(self_loop);
  REQUIRE_FALSE(loop_report.ok());
  CHECK(loop_report.issues.front().find("self-loop") != std::string::npos);

  Digraph parallel(2);
  parallel.add_edge(0, 1);
  parallel.add_edge(0, 1);
  const auto parallel_report = validate_graph(parallel);
  REQUIRE_FALSE(parallel_report.ok());
  CHECK(parallel_report.issues.front().find("parallel") != std::string::npos);
}

TEST_CASE("dyn_moves on the 2-cycle") {
  const Digraph g(2, {{0, 1}, {1, 0}});
  const auto moves = dyn_moves(g, {3, 0});
  REQUIRE(moves.size() == 2);
  CHECK(moves[0].first == Move{0, 2});
  CHECK(moves[0].second == Position{1, 1});
  CHECK(moves[1].first == Move{0, 3});
  CHECK(moves[1].second == Position{0, 1});
}

TEST_CASE("dyn_moves on an isolated vertex removes any positive amount") {
  const Digraph g(1);
  const auto moves = dyn_moves(g, {3});
  REQUIRE(moves.size() == 3);
  CHECK(moves[0].second == Position{2});
  CHECK(moves[1].second == Position{1});
  CHECK(moves[2].second == Position{0});
}

TEST_CASE("a vertex needs more tokens than its out-degree") {
  Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  CHECK(dyn_moves(g, {2, 0, 0}).empty());   // 2 < d_out + 1 = 3
  CHECK(dyn_moves(g, {3, 0, 0}).size() == 1);
}

TEST_CASE("move generation matches the set-builder oracle") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 120; ++iter) {
    const Digraph g = random_digraph(rng, 4);
    std::uniform_int_distribution<TokenCount> dist(0, 6);
    Position p(g.vertex_count());
    for (auto& v : p) v = dist(rng);

    std::set<Position> produced;
    for (const auto& [move, succ] : dyn_moves(g, p)) {
      CHECK(move.removed >= g.out_degree(move.vertex) + 1);
      CHECK(move.removed <= p[static_cast<std::size_t>(move.vertex)]);
      CHECK(produced.insert(succ).second);  // distinct moves, distinct successors
    }
    REQUIRE(produced == naive_successors(g, p));
  }
}

TEST_CASE("every move strictly sheds tokens") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 100; ++iter) {
    const Digraph g = random_digraph(rng, 4);
    std::uniform_int_distribution<TokenCount> dist(0, 6);
    Position p(g.vertex_count());
    for (auto& v : p) v = dist(rng);
    for (const auto& [move, succ] : dyn_moves(g, p)) {
      CHECK(total_tokens(succ) ==
            total_tokens(p) - move.removed + g.out_degree(move.vertex));
      CHECK(total_tokens(succ) < total_tokens(p));
    }
  }
}

TEST_CASE("total_tokens sums the coordinates") {
  CHECK(total_tokens({0, 0}) == 0);
  CHECK(total_tokens({3, 0}) == 3);
  CHECK(total_tokens({6, 1, 1}) == 8);
}

TEST_CASE("DynRules rejects invalid graphs and solves valid ones") {
  Digraph bad(2);
  bad.add_edge(0, 0);
  CHECK_THROWS_AS(DynRules{bad}, std::invalid_argument);

  const DynRules yama_like(Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(sg_value(yama_like, {5, 2}) == 3);
  CHECK(yama_like.measure({3, 0}) == 3);
  for (const Position& q : yama_like.options({3, 0})) {
    CHECK(total_tokens(q) <= 2);
  }
}

TEST_CASE("the edgeless graph plays Bouton Nim") {
  for (int n = 1; n <= 3; ++n) {
    const DynRules rules(Digraph(static_cast<std::size_t>(n)));
    MemoTable memo;
    Position p(static_cast<std::size_t>(n), 0);
    const auto sweep = [&](auto&& self, int at) -> void {
      if (at == n) {
        SgValue expected = 0;
        for (TokenCount v : p) expected ^= v;
        REQUIRE(sg_value(rules, p, memo) == expected);
        return;
      }
      for (TokenCount v = 0; v <= 6; ++v) {
        p[static_cast<std::size_t>(at)] = v;
        self(self, at + 1);
      }
      p[static_cast<std::size_t>(at)] = 0;
    };
    sweep(sweep, 0);
  }
}

TEST_CASE("G4 partition validation") {
  // v -> w plus an unrelated sink is not complete to W1.
  Digraph g(3);
  g.add_edge(0, 1);
  const G4Partition incomplete{{0}, {1, 2}};
  CHECK_FALSE(validate_g4_partition(g, incomplete).ok());

  Digraph star(3, {{0, 1}, {0, 2}});
  CHECK(validate_g4_partition(star, {{0}, {1, 2}}).ok());
  CHECK_FALSE(validate_g4_partition(star, {{0}, {1}}).ok());   // vertex 2 unassigned
  CHECK_FALSE(validate_g4_partition(star, {{0, 1}, {1, 2}}).ok());  // assigned twice

  // Empty W1 degenerates to the original game and is permitted.
  const Digraph cycle(2, {{0, 1}, {1, 0}});
  CHECK(validate_g4_partition(cycle, {{0, 1}, {}}).ok());
}

TEST_CASE("auxiliary rules count full-graph out-degrees") {
  // V1 = {v}, W1 = {w1, w2}: moving needs 3 tokens even though no deposit
  // lands inside V1.
  const Digraph star(3, {{0, 1}, {0, 2}});
  const AuxRules aux(star, {{0}, {1, 2}});
  CHECK(aux.options({2}).empty());
  {
    const auto from3 = aux.options({3});
    REQUIRE(from3.size() == 1);
    CHECK(from3[0] == Position{0});
  }
  {
    const auto from5 = aux.options({5});
    REQUIRE(from5.size() == 3);
    CHECK(from5[0] == Position{2});
    CHECK(from5[1] == Position{1});
    CHECK(from5[2] == Position{0});
  }
}

TEST_CASE("auxiliary rules keep V1 deposits only") {
  // Diamond: v1 -> v2 plus complete edges into {w1, w2}.
  const Digraph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const G4Partition part{{0, 1}, {2, 3}};
  const AuxRules aux(diamond, part);

  const auto moves = aux.options({4, 0});
  REQUIRE(moves.size() == 1);  // only v1 is playable, removing exactly 4
  CHECK(moves[0] == Position{0, 1});

  CHECK(aux.options({3, 1}).empty());
  CHECK(aux.options({0, 2}).empty());
  {
    const auto from_y3 = aux.options({0, 3});
    REQUIRE(from_y3.size() == 1);  // v2 removes its 3 tokens, nothing comes back
    CHECK(from_y3[0] == Position{0, 0});
  }
}

TEST_CASE("auxiliary outcomes") {
  const Digraph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const G4Partition part{{0, 1}, {2, 3}};
  CHECK(aux_outcome(diamond, part, {0, 0}) == Outcome::P);  // terminal
  CHECK(aux_outcome(diamond, part, {3, 1}) == Outcome::P);
  CHECK(aux_outcome(diamond, part, {4, 0}) == Outcome::N);

  // Out-star: the center is playable exactly when it holds n + 1 tokens.
  for (int n = 1; n <= 4; ++n) {
    Digraph star(static_cast<std::size_t>(n + 1));
    G4Partition sp;
    sp.v1.push_back(0);
    for (int k = 1; k <= n; ++k) {
      star.add_edge(0, k);
      sp.w1.push_back(k);
    }
    CHECK(aux_outcome(star, sp, {n}) == Outcome::P);
    CHECK(aux_outcome(star, sp, {n + 1}) == Outcome::N);
  }
}

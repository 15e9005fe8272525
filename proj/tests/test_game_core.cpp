#include <doctest.h>

#include <algorithm>
#include <random>

#include "dyn/digraph.hpp"
#include "dyn/game_core.hpp"
#include "dyn/yama.hpp"

using namespace dyn;

namespace {

// Straight transcription of the definitions, independent of the engine:
// g(p) = mex of child values, recomputed without memo or ordering tricks.
SgValue naive_sg(const GameRules& rules, const Position& p) {
  std::vector<SgValue> child;
  for (const Position& q : rules.options(p)) child.push_back(naive_sg(rules, q));
  SgValue r = 0;
  while (std::find(child.begin(), child.end(), r) != child.end()) ++r;
  return r;
}

Outcome naive_outcome(const GameRules& rules, const Position& p) {
  for (const Position& q : rules.options(p)) {
    if (naive_outcome(rules, q) == Outcome::P) return Outcome::N;
  }
  return Outcome::P;
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

Position random_tokens(std::mt19937_64& rng, std::size_t n, TokenCount max_value) {
  std::uniform_int_distribution<TokenCount> dist(0, max_value);
  Position p(n);
  for (auto& v : p) v = dist(rng);
  return p;
}

// A deliberately broken ruleset whose "measure" does not decrease.
class BrokenMeasureRules final : public GameRules {
 public:
  std::vector<Position> options(const Position& pos) const override {
    if (pos[0] == 0) return {};
    return {{pos[0] - 1}};
  }
  std::int64_t measure(const Position&) const override { return 1; }
};

}  // namespace

TEST_CASE("mex basics") {
  CHECK(mex({}) == 0);
  CHECK(mex({0, 1, 2}) == 3);
  CHECK(mex({1, 2, 5}) == 0);
  CHECK(mex({0, 2, 3}) == 1);
  CHECK(mex({0, 0, 1, 1}) == 2);
}

TEST_CASE("mex properties on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<SgValue> val(0, 10);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<SgValue> values(static_cast<std::size_t>(len(rng)));
    for (auto& v : values) v = val(rng);
    const SgValue r = mex(values);
    CHECK(std::find(values.begin(), values.end(), r) == values.end());
    for (SgValue k = 0; k < r; ++k) {
      CHECK(std::find(values.begin(), values.end(), k) != values.end());
    }
  }
}

TEST_CASE("sg_value on Yama Nim spot positions") {
  const YamaRules rules;
  CHECK(sg_value(rules, {0, 0}) == 0);  // terminal
  CHECK(sg_value(rules, {2, 0}) == 1);
  CHECK(sg_value(rules, {5, 2}) == 3);
}

TEST_CASE("sg_value on a single free pile is the pile size") {
  const DynRules rules(Digraph(1));
  for (TokenCount t = 0; t <= 6; ++t) {
    CHECK(sg_value(rules, {t}) == t);
    CHECK(naive_sg(rules, {t}) == t);
  }
}

TEST_CASE("engine agrees with the naive recursion on random instances") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph g = random_digraph(rng, 3);
    const Position p = random_tokens(rng, g.vertex_count(), 4);
    const DynRules rules(g);
    CHECK(sg_value(rules, p) == naive_sg(rules, p));
    CHECK(outcome(rules, p) == naive_outcome(rules, p));
  }
}

TEST_CASE("outcome examples and the SG correspondence") {
  const YamaRules rules;
  CHECK(outcome(rules, {1, 1}) == Outcome::P);
  CHECK(outcome(rules, {4, 0}) == Outcome::N);
  CHECK(outcome(rules, {0, 0}) == Outcome::P);  // terminal

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    const Digraph g = random_digraph(rng, 3);
    const Position p = random_tokens(rng, g.vertex_count(), 5);
    const DynRules dyn_rules(g);
    CHECK(outcome(dyn_rules, p) == outcome_via_sg(dyn_rules, p));
  }
}

TEST_CASE("best_move returns the first SG-0 option in enumeration order") {
  const YamaRules rules;
  // (4,0) options in order: (2,1), (1,1), (0,1); all have SG 0.
  const auto move = best_move(rules, {4, 0});
  REQUIRE(move.has_value());
  CHECK(*move == Position{2, 1});
  CHECK(sg_value(rules, *move) == 0);

  CHECK_FALSE(best_move(rules, {1, 1}).has_value());
  CHECK_FALSE(best_move(rules, {0, 0}).has_value());
}

TEST_CASE("memo determinism: warm and fresh memos agree") {
  const YamaRules rules;
  MemoTable warm;
  const SgValue first = sg_value(rules, {6, 1}, warm);
  const SgValue again = sg_value(rules, {6, 1}, warm);
  MemoTable fresh;
  const SgValue cold = sg_value(rules, {6, 1}, fresh);
  CHECK(first == again);
  CHECK(first == cold);

  // A different query reusing the warm memo still matches a cold solve.
  const SgValue warm_other = sg_value(rules, {7, 2}, warm);
  CHECK(warm_other == sg_value(rules, {7, 2}));
}

TEST_CASE("memo entries are never rewritten") {
  const YamaRules rules;
  MemoTable memo;
  sg_value(rules, {5, 5}, memo);
  const MemoTable snapshot = memo;
  sg_value(rules, {6, 6}, memo);
  for (const auto& [pos, value] : snapshot) {
    CHECK(memo.at(pos) == value);
  }
}

TEST_CASE("state cap raises a resource error") {
  const DynRules rules(Digraph(1));
  CHECK_THROWS_AS(sg_value(rules, {100}, SolveLimits{5}), ResourceLimitError);
  CHECK_THROWS_AS(outcome(rules, {100}, SolveLimits{5}), ResourceLimitError);
  // Generous cap: fine.
  CHECK(sg_value(rules, {100}, SolveLimits{200}) == 100);
}

TEST_CASE("a non-decreasing measure is rejected") {
  const BrokenMeasureRules rules;
  CHECK_THROWS_AS(sg_value(rules, {3}), std::logic_error);
}

TEST_CASE("sum_sg equals XOR of component values") {
  const YamaRules yama;
  CHECK(sum_sg(yama, {2, 0}, yama, {2, 0}) == 0);  // 1 xor 1

  const DynRules pile(Digraph(1));
  CHECK(sum_sg(yama, {5, 2}, pile, {3}) == 0);  // 3 xor 3

  // Adding a terminal component changes nothing.
  CHECK(sum_sg(yama, {5, 2}, yama, {0, 0}) == sg_value(yama, {5, 2}));
}

TEST_CASE("sum_game options are exactly the component moves") {
  const YamaRules yama;
  const DynRules pile(Digraph(1));
  const SumRules sum(yama, 2, pile, 1);

  // Terminal left component: only right moves, lifted.
  CHECK(sum.options(sum.combine({0, 0}, {2})).size() == 2);
  // |f(2,0)| = 1 and one right move.
  CHECK(sum.options(sum.combine({2, 0}, {1})).size() == 2);
}

TEST_CASE("explicit sum solve matches sum_sg on a small grid") {
  const YamaRules yama;
  const DynRules pile(Digraph(1));
  const SumRules sum(yama, 2, pile, 1);
  MemoTable memo;
  for (TokenCount x = 0; x <= 4; ++x) {
    for (TokenCount y = 0; y <= 4; ++y) {
      for (TokenCount t = 0; t <= 4; ++t) {
        CHECK(sg_value(sum, sum.combine({x, y}, {t}), memo) == sum_sg(yama, {x, y}, pile, {t}));
      }
    }
  }
}

TEST_CASE("max_playout_length is bounded by the measure") {
  const YamaRules rules;
  for (TokenCount x = 0; x <= 6; ++x) {
    for (TokenCount y = 0; y <= 6; ++y) {
      CHECK(max_playout_length(rules, {x, y}) <= x + y);
    }
  }
}

#include <doctest.h>

#include <algorithm>

#include "dyn/digraph.hpp"
#include "dyn/yama.hpp"

using namespace dyn;

namespace {

bool contains(const std::vector<YamaPosition>& options, YamaPosition q) {
  return std::find(options.begin(), options.end(), q) != options.end();
}

}  // namespace

TEST_CASE("yama_options matches the move rule") {
  CHECK(yama_options({0, 0}).empty());
  CHECK(yama_options({1, 1}).empty());

  const auto from_30 = yama_options({3, 0});
  CHECK(from_30.size() == 2);
  CHECK(contains(from_30, {1, 1}));
  CHECK(contains(from_30, {0, 1}));

  const auto from_22 = yama_options({2, 2});
  CHECK(from_22.size() == 2);
  CHECK(contains(from_22, {0, 3}));
  CHECK(contains(from_22, {3, 0}));
}

TEST_CASE("yama_is_p is the unit band") {
  CHECK(yama_is_p({7, 8}));
  CHECK_FALSE(yama_is_p({0, 2}));
  CHECK(yama_is_p({0, 0}));
  CHECK(yama_is_p({5, 4}));
  CHECK_FALSE(yama_is_p({9, 2}));
}

TEST_CASE("yama_sg closed form") {
  CHECK(yama_sg({5, 2}) == 3);
  CHECK(yama_sg({3, 3}) == 0);
  CHECK(yama_sg({4, 0}) == 1);
  CHECK(yama_sg({0, 4}) == 1);
  CHECK(yama_sg({2, 9}) == 3);
}

TEST_CASE("closed forms agree with the engine across the grid") {
  constexpr TokenCount bound = 40;
  const YamaRules rules;
  MemoTable memo;
  for (TokenCount x = 0; x <= bound; ++x) {
    for (TokenCount y = 0; y <= bound; ++y) {
      const SgValue engine = sg_value(rules, {x, y}, memo);
      REQUIRE(yama_sg({x, y}) == engine);
      REQUIRE(yama_is_p({x, y}) == (engine == 0));
    }
  }
}

TEST_CASE("band positions never move to the band; outsiders always can") {
  constexpr TokenCount bound = 40;
  for (TokenCount x = 0; x <= bound; ++x) {
    for (TokenCount y = 0; y <= bound; ++y) {
      const auto options = yama_options({x, y});
      if (yama_is_p({x, y})) {
        for (const YamaPosition& q : options) REQUIRE_FALSE(yama_is_p(q));
      } else {
        REQUIRE(std::any_of(options.begin(), options.end(),
                            [](const YamaPosition& q) { return yama_is_p(q); }));
      }
    }
  }
}

TEST_CASE("the 2-cycle digraph plays Yama Nim") {
  const Digraph two_cycle(2, {{0, 1}, {1, 0}});
  for (TokenCount x = 0; x <= 40; ++x) {
    for (TokenCount y = 0; y <= 40; ++y) {
      std::vector<Position> lifted;
      for (const YamaPosition& q : yama_options({x, y})) lifted.push_back({q.x, q.y});
      std::vector<Position> graph_moves;
      for (const auto& [move, succ] : dyn_moves(two_cycle, {x, y})) graph_moves.push_back(succ);
      std::sort(lifted.begin(), lifted.end());
      std::sort(graph_moves.begin(), graph_moves.end());
      REQUIRE(lifted == graph_moves);
    }
  }
}

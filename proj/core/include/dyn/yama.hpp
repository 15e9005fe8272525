// Two-pile Yama Nim: take at least two tokens from one pile, add one to the
// other. Closed forms for the P-positions and SG values, plus a GameRules
// adapter for the generic engine.
#pragma once

#include <ostream>
#include <vector>

#include "dyn/game_core.hpp"

namespace dyn {

struct YamaPosition {
  TokenCount x = 0;
  TokenCount y = 0;
  friend bool operator==(const YamaPosition&, const YamaPosition&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const YamaPosition& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

// All options of (x, y): {(x-i, y+1) : 2 <= i <= x} then {(x+1, y-i) : 2 <= i <= y},
// each branch in ascending removal order.
std::vector<YamaPosition> yama_options(const YamaPosition& p);

// P-position iff |x - y| <= 1.
bool yama_is_p(const YamaPosition& p);

// 0 inside the band |x - y| <= 1, min(x, y) + 1 outside it.
SgValue yama_sg(const YamaPosition& p);

// Yama Nim over length-2 positions (x, y); measure is the total token count.
class YamaRules final : public GameRules {
 public:
  std::vector<Position> options(const Position& pos) const override;
  std::int64_t measure(const Position& pos) const override;
};

}  // namespace dyn

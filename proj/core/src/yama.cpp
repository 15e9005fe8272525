#include "dyn/yama.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dyn {

std::vector<YamaPosition> yama_options(const YamaPosition& p) {
  std::vector<YamaPosition> out;
  for (TokenCount i = 2; i <= p.x; ++i) out.push_back({p.x - i, p.y + 1});
  for (TokenCount i = 2; i <= p.y; ++i) out.push_back({p.x + 1, p.y - i});
  return out;
}

bool yama_is_p(const YamaPosition& p) { return std::llabs(p.x - p.y) <= 1; }

SgValue yama_sg(const YamaPosition& p) {
  if (yama_is_p(p)) return 0;
  return std::min(p.x, p.y) + 1;
}

std::vector<Position> YamaRules::options(const Position& pos) const {
  if (pos.size() != 2) throw std::invalid_argument("Yama Nim positions have two piles");
  std::vector<Position> out;
  for (const YamaPosition& q : yama_options({pos[0], pos[1]})) out.push_back({q.x, q.y});
  return out;
}

std::int64_t YamaRules::measure(const Position& pos) const { return pos.at(0) + pos.at(1); }

}  // namespace dyn

#include "dyn/game_core.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace dyn {

namespace {

using PositionSet = std::unordered_set<Position, PositionHash>;

// Collects every position reachable from `root` that is not already known,
// verifying the termination measure along each edge. `known_count` is the
// number of positions already solved elsewhere; the cap applies to the total.
template <typename KnownFn>
std::vector<const Position*> discover(const GameRules& rules, const Position& root,
                                      PositionSet& fresh, std::size_t known_count,
                                      KnownFn known, const SolveLimits& limits) {
  std::vector<const Position*> stack;
  if (known(root)) return {};
  if (1 + known_count > limits.max_states) throw ResourceLimitError(limits.max_states);
  stack.push_back(&*fresh.insert(root).first);

  while (!stack.empty()) {
    const Position* cur = stack.back();
    stack.pop_back();
    const std::int64_t cur_measure = rules.measure(*cur);
    for (Position& next : rules.options(*cur)) {
      const std::int64_t next_measure = rules.measure(next);
      if (next_measure >= cur_measure || next_measure < 0) {
        throw std::logic_error("ruleset violates its termination measure");
      }
      if (known(next) || fresh.contains(next)) continue;
      if (fresh.size() + 1 + known_count > limits.max_states) {
        throw ResourceLimitError(limits.max_states);
      }
      stack.push_back(&*fresh.insert(std::move(next)).first);
    }
  }

  // Children must be solved before parents; the strictly decreasing measure
  // makes an ascending sort a valid evaluation order.
  std::vector<const Position*> order;
  order.reserve(fresh.size());
  for (const Position& p : fresh) order.push_back(&p);
  std::sort(order.begin(), order.end(), [&](const Position* a, const Position* b) {
    return rules.measure(*a) < rules.measure(*b);
  });
  return order;
}

}  // namespace

SgValue mex(const std::vector<SgValue>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (SgValue v : values) {
    if (v >= 0 && static_cast<std::size_t>(v) < seen.size()) seen[static_cast<std::size_t>(v)] = true;
  }
  SgValue r = 0;
  while (seen[static_cast<std::size_t>(r)]) ++r;
  return r;
}

SgValue sg_value(const GameRules& rules, const Position& pos, MemoTable& memo,
                 const SolveLimits& limits) {
  if (auto it = memo.find(pos); it != memo.end()) return it->second;

  PositionSet fresh;
  const auto order = discover(
      rules, pos, fresh, memo.size(), [&](const Position& p) { return memo.contains(p); }, limits);

  std::vector<SgValue> child_values;
  for (const Position* state : order) {
    child_values.clear();
    for (const Position& q : rules.options(*state)) child_values.push_back(memo.at(q));
    memo.emplace(*state, mex(child_values));
  }
  return memo.at(pos);
}

SgValue sg_value(const GameRules& rules, const Position& pos, const SolveLimits& limits) {
  MemoTable memo;
  return sg_value(rules, pos, memo, limits);
}

Outcome outcome(const GameRules& rules, const Position& pos, const SolveLimits& limits) {
  std::unordered_map<Position, bool, PositionHash> next_wins;
  PositionSet fresh;
  const auto order =
      discover(rules, pos, fresh, 0, [](const Position&) { return false; }, limits);

  for (const Position* state : order) {
    bool wins = false;
    for (const Position& q : rules.options(*state)) {
      if (!next_wins.at(q)) {
        wins = true;
        break;
      }
    }
    next_wins.emplace(*state, wins);
  }
  return next_wins.at(pos) ? Outcome::N : Outcome::P;
}

Outcome outcome_via_sg(const GameRules& rules, const Position& pos, const SolveLimits& limits) {
  return sg_value(rules, pos, limits) == 0 ? Outcome::P : Outcome::N;
}

std::optional<Position> best_move(const GameRules& rules, const Position& pos,
                                  const SolveLimits& limits) {
  MemoTable memo;
  if (sg_value(rules, pos, memo, limits) == 0) return std::nullopt;
  for (Position& q : rules.options(pos)) {
    if (memo.at(q) == 0) return std::move(q);
  }
  throw std::logic_error("N-position without an SG-0 option");
}

std::int64_t max_playout_length(const GameRules& rules, const Position& pos,
                                const SolveLimits& limits) {
  std::unordered_map<Position, std::int64_t, PositionHash> depth;
  PositionSet fresh;
  const auto order =
      discover(rules, pos, fresh, 0, [](const Position&) { return false; }, limits);

  for (const Position* state : order) {
    std::int64_t d = 0;
    for (const Position& q : rules.options(*state)) d = std::max(d, 1 + depth.at(q));
    depth.emplace(*state, d);
  }
  return depth.at(pos);
}

SgValue sum_sg(const GameRules& rules1, const Position& pos1, const GameRules& rules2,
               const Position& pos2, const SolveLimits& limits) {
  return sg_value(rules1, pos1, limits) ^ sg_value(rules2, pos2, limits);
}

SumRules::SumRules(const GameRules& first, std::size_t first_len, const GameRules& second,
                   std::size_t second_len)
    : first_(first), second_(second), first_len_(first_len), second_len_(second_len) {}

Position SumRules::combine(const Position& a, const Position& b) const {
  if (a.size() != first_len_ || b.size() != second_len_) {
    throw std::invalid_argument("component position length mismatch");
  }
  Position out;
  out.reserve(first_len_ + second_len_);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Position> SumRules::options(const Position& pos) const {
  if (pos.size() != first_len_ + second_len_) {
    throw std::invalid_argument("sum position length mismatch");
  }
  const Position left(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(first_len_));
  const Position right(pos.begin() + static_cast<std::ptrdiff_t>(first_len_), pos.end());

  std::vector<Position> out;
  for (const Position& l : first_.options(left)) {
    Position q = pos;
    std::copy(l.begin(), l.end(), q.begin());
    out.push_back(std::move(q));
  }
  for (const Position& r : second_.options(right)) {
    Position q = pos;
    std::copy(r.begin(), r.end(), q.begin() + static_cast<std::ptrdiff_t>(first_len_));
    out.push_back(std::move(q));
  }
  return out;
}

std::int64_t SumRules::measure(const Position& pos) const {
  const Position left(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(first_len_));
  const Position right(pos.begin() + static_cast<std::ptrdiff_t>(first_len_), pos.end());
  return first_.measure(left) + second_.measure(right);
}

}  // namespace dyn

// Generic engine for short impartial games under normal play: mex, memoized
// Sprague-Grundy solving, P/N classification, winning-move extraction and
// disjunctive sums.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dyn {

using TokenCount = std::int64_t;

// A game state: one non-negative token count per coordinate. What the
// coordinates mean is up to the ruleset (piles, digraph vertices, pairs of
// component positions, ...).
using Position = std::vector<TokenCount>;

using SgValue = std::int64_t;

enum class Outcome { P, N };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }
inline std::ostream& operator<<(std::ostream& os, Outcome o) { return os << to_string(o); }

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (TokenCount v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Sprague-Grundy memo. Entries are immutable once written.
using MemoTable = std::unordered_map<Position, SgValue, PositionHash>;

// Raised when a solve would visit more states than the configured cap.
// Signals that the instance is too large for exhaustive search, not that the
// position is ill-formed.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t cap)
      : std::runtime_error("state cap exceeded (" + std::to_string(cap) + " states)"), cap_(cap) {}
  ResourceLimitError(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct SolveLimits {
  std::size_t max_states = 10'000'000;
};

// A short impartial game. options() returns the finite set of successor
// positions; measure() is the termination witness: a non-negative integer
// that strictly decreases along every move.
class GameRules {
 public:
  virtual ~GameRules() = default;
  virtual std::vector<Position> options(const Position& pos) const = 0;
  virtual std::int64_t measure(const Position& pos) const = 0;
};

// Minimal excluded non-negative integer. Duplicates in `values` are fine.
SgValue mex(const std::vector<SgValue>& values);

// Sprague-Grundy value of `pos`, memoizing every position it depends on.
// Warm memo entries are reused; new entries are never overwritten.
SgValue sg_value(const GameRules& rules, const Position& pos, MemoTable& memo,
                 const SolveLimits& limits = {});
SgValue sg_value(const GameRules& rules, const Position& pos, const SolveLimits& limits = {});

// P/N verdict by direct win/loss bookkeeping over the reachable set. Agrees
// with sg_value == 0 by the Sprague-Grundy correspondence; both paths are
// kept so they can check each other.
Outcome outcome(const GameRules& rules, const Position& pos, const SolveLimits& limits = {});
Outcome outcome_via_sg(const GameRules& rules, const Position& pos, const SolveLimits& limits = {});

// For an N-position, the first option (in the ruleset's enumeration order)
// with SG value 0; empty for P-positions.
std::optional<Position> best_move(const GameRules& rules, const Position& pos,
                                  const SolveLimits& limits = {});

// Length of the longest playout from `pos`; bounded above by measure(pos).
std::int64_t max_playout_length(const GameRules& rules, const Position& pos,
                                const SolveLimits& limits = {});

// g(x + y) = g(x) XOR g(y).
SgValue sum_sg(const GameRules& rules1, const Position& pos1, const GameRules& rules2,
               const Position& pos2, const SolveLimits& limits = {});

// Disjunctive sum as an explicit ruleset over concatenated coordinate
// vectors: a move is a move in exactly one component. Holds references; the
// component rulesets must outlive the sum.
class SumRules final : public GameRules {
 public:
  SumRules(const GameRules& first, std::size_t first_len, const GameRules& second,
           std::size_t second_len);

  std::vector<Position> options(const Position& pos) const override;
  std::int64_t measure(const Position& pos) const override;

  Position combine(const Position& a, const Position& b) const;

 private:
  const GameRules& first_;
  const GameRules& second_;
  std::size_t first_len_;
  std::size_t second_len_;
};

}  // namespace dyn

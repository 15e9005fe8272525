// Positive CNF formulas and the variable-selection game: players alternately
// claim unselected variables, the first player's picks become 1, the second
// player's 0, and the first player wins iff the formula evaluates to true.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dyn/game_core.hpp"

namespace dyn {

// Variables are 1..n; clauses are nonempty sets of variable indices, stored
// sorted and duplicate-free. No negation exists in the type.
struct PosCnf {
  int n = 0;
  std::vector<std::vector<int>> clauses;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// DIMACS-flavored text: optional `c` comment lines, a `p poscnf <n> <m>`
// header, then m clauses as positive integers terminated by 0 (clauses may
// span lines). Negated literals are rejected.
PosCnf parse_poscnf(const std::string& text);

std::string to_poscnf_text(const PosCnf& f);

bool poscnf_eval(const PosCnf& f, const std::vector<bool>& assignment);

enum class CnfWinner { P1, P0 };
inline const char* to_string(CnfWinner w) { return w == CnfWinner::P1 ? "P1" : "P0"; }

struct PoscnfLimits {
  int max_variables = 20;
};

// Exact minimax over selection orders, memoized on (selected, assigned-one)
// variable sets.
CnfWinner poscnf_winner(const PosCnf& f, const PoscnfLimits& limits = {});

// Every formula with 1..max_n variables, 1..max_m clauses and clause size at
// most max_clause_size, deduplicated up to variable renaming. Clause lists
// are multisets, so repeated clauses appear.
std::vector<PosCnf> enumerate_poscnf(int max_n, int max_m, int max_clause_size);

}  // namespace dyn

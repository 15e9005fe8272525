#include "dyn/poscnf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dyn {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 0;
  std::string cur;
  int cur_line = 0, cur_col = 0;
  bool in_comment = false;

  auto flush = [&]() {
    if (!cur.empty()) {
      tokens.push_back({cur, cur_line, cur_col});
      cur.clear();
    }
  };

  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : '\n';
    if (ch == '\n') {
      flush();
      in_comment = false;
      ++line;
      col = 0;
      continue;
    }
    ++col;
    if (in_comment) continue;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
      continue;
    }
    // Comment lines start with 'c' in column 1 and run to end of line.
    if (cur.empty() && ch == 'c' && col == 1) {
      in_comment = true;
      continue;
    }
    if (cur.empty()) {
      cur_line = line;
      cur_col = col;
    }
    cur += ch;
  }
  return tokens;
}

long long parse_int(const Token& tok) {
  const std::string& s = tok.text;
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) throw ParseError(tok.line, tok.col, "expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(tok.line, tok.col, "expected an integer, got '" + s + "'");
    }
  }
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError(tok.line, tok.col, "integer out of range: '" + s + "'");
  }
}

}  // namespace

PosCnf parse_poscnf(const std::string& text) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t i = 0;
  auto need = [&](const char* what) -> const Token& {
    if (i >= tokens.size()) {
      const int line = tokens.empty() ? 1 : tokens.back().line;
      const int col = tokens.empty() ? 1 : tokens.back().col + static_cast<int>(tokens.back().text.size());
      throw ParseError(line, col, std::string("unexpected end of input, expected ") + what);
    }
    return tokens[i++];
  };

  const Token& p = need("'p' header");
  if (p.text != "p") throw ParseError(p.line, p.col, "expected 'p poscnf <n> <m>' header");
  const Token& fmt = need("format name 'poscnf'");
  if (fmt.text != "poscnf") throw ParseError(fmt.line, fmt.col, "unknown format '" + fmt.text + "', expected 'poscnf'");
  const Token& n_tok = need("variable count");
  const long long n = parse_int(n_tok);
  if (n < 1) throw ParseError(n_tok.line, n_tok.col, "variable count must be at least 1");
  const Token& m_tok = need("clause count");
  const long long m = parse_int(m_tok);
  if (m < 1) throw ParseError(m_tok.line, m_tok.col, "clause count must be at least 1");

  PosCnf f;
  f.n = static_cast<int>(n);
  std::vector<int> clause;
  Token clause_start = m_tok;
  while (static_cast<long long>(f.clauses.size()) < m) {
    const Token& tok = need("clause literal or terminating 0");
    const long long lit = parse_int(tok);
    if (lit < 0) throw ParseError(tok.line, tok.col, "negative literal " + tok.text + " (formulas are positive)");
    if (lit == 0) {
      if (clause.empty()) throw ParseError(tok.line, tok.col, "empty clause");
      std::sort(clause.begin(), clause.end());
      clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
      f.clauses.push_back(clause);
      clause.clear();
      continue;
    }
    if (lit > n) {
      throw ParseError(tok.line, tok.col,
                       "variable " + tok.text + " out of range (header declares n=" + std::to_string(n) + ")");
    }
    if (clause.empty()) clause_start = tok;
    clause.push_back(static_cast<int>(lit));
  }
  if (!clause.empty()) {
    throw ParseError(clause_start.line, clause_start.col, "clause not terminated by 0");
  }
  if (i < tokens.size()) {
    throw ParseError(tokens[i].line, tokens[i].col, "trailing content after the last clause");
  }
  return f;
}

std::string to_poscnf_text(const PosCnf& f) {
  std::ostringstream os;
  os << "p poscnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int v : clause) os << v << ' ';
    os << "0\n";
  }
  return os.str();
}

bool poscnf_eval(const PosCnf& f, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(f.n)) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int v : clause) {
      if (assignment[static_cast<std::size_t>(v - 1)]) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

struct WinnerSolver {
  const PosCnf& f;
  std::vector<std::uint32_t> clause_masks;
  std::uint32_t all_mask;
  std::unordered_map<std::uint64_t, bool> memo;

  explicit WinnerSolver(const PosCnf& formula) : f(formula) {
    for (const auto& clause : f.clauses) {
      std::uint32_t mask = 0;
      for (int v : clause) mask |= 1u << (v - 1);
      clause_masks.push_back(mask);
    }
    all_mask = f.n == 32 ? ~0u : (1u << f.n) - 1u;
  }

  bool eval(std::uint32_t ones) const {
    for (std::uint32_t mask : clause_masks) {
      if ((mask & ones) == 0) return false;
    }
    return true;
  }

  // True iff the first player wins from this partial selection.
  bool p1_wins(std::uint32_t selected, std::uint32_t ones) {
    if (selected == all_mask) return eval(ones);
    const std::uint64_t key = (static_cast<std::uint64_t>(selected) << 32) | ones;
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const bool p1_turn = std::popcount(selected) % 2 == 0;
    bool result = !p1_turn;
    for (std::uint32_t rest = all_mask & ~selected; rest != 0; rest &= rest - 1) {
      const std::uint32_t pick = rest & (~rest + 1);
      const bool sub = p1_wins(selected | pick, p1_turn ? (ones | pick) : ones);
      if (p1_turn && sub) {
        result = true;
        break;
      }
      if (!p1_turn && !sub) {
        result = false;
        break;
      }
    }
    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

CnfWinner poscnf_winner(const PosCnf& f, const PoscnfLimits& limits) {
  if (f.n > limits.max_variables) {
    throw ResourceLimitError(static_cast<std::size_t>(limits.max_variables),
                             "formula has " + std::to_string(f.n) +
                                 " variables, above the configured cap of " +
                                 std::to_string(limits.max_variables));
  }
  if (f.n < 1 || f.n > 32) throw std::invalid_argument("variable count out of range");
  WinnerSolver solver(f);
  return solver.p1_wins(0, 0) ? CnfWinner::P1 : CnfWinner::P0;
}

namespace {

// Clause lists as sorted vectors of bitmasks give a canonical encoding; a
// formula is kept iff no variable permutation yields a smaller encoding.
std::vector<std::uint32_t> clause_mask_multiset(const PosCnf& f) {
  std::vector<std::uint32_t> masks;
  for (const auto& clause : f.clauses) {
    std::uint32_t mask = 0;
    for (int v : clause) mask |= 1u << (v - 1);
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (mask & (1u << i)) out |= 1u << perm[i];
  }
  return out;
}

bool is_canonical(const PosCnf& f) {
  const auto base = clause_mask_multiset(f);
  std::vector<int> perm(static_cast<std::size_t>(f.n));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(base.size());
    for (std::uint32_t mask : base) mapped.push_back(permute_mask(mask, perm));
    std::sort(mapped.begin(), mapped.end());
    if (mapped < base) return false;
  }
  return true;
}

}  // namespace

std::vector<PosCnf> enumerate_poscnf(int max_n, int max_m, int max_clause_size) {
  std::vector<PosCnf> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::uint32_t> candidate_masks;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) <= max_clause_size) candidate_masks.push_back(mask);
    }
    for (int m = 1; m <= max_m; ++m) {
      // Non-decreasing index tuples enumerate clause multisets.
      std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
      while (true) {
        PosCnf f;
        f.n = n;
        for (std::size_t idx : pick) {
          std::vector<int> clause;
          for (int v = 0; v < n; ++v) {
            if (candidate_masks[idx] & (1u << v)) clause.push_back(v + 1);
          }
          f.clauses.push_back(std::move(clause));
        }
        if (is_canonical(f)) out.push_back(std::move(f));

        int pos = m - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == candidate_masks.size() - 1) --pos;
        if (pos < 0) break;
        const std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k < m; ++k) pick[static_cast<std::size_t>(k)] = next;
      }
    }
  }
  return out;
}

}  // namespace dyn

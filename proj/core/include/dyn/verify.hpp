// Theorem-verification suites: each one checks a closed form or a structural
// claim against an independent exhaustive oracle on a bounded family and
// reports counts plus the first counterexample found.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyn/game_core.hpp"

namespace dyn {

struct SuiteResult {
  std::string suite;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
  double elapsed_seconds = 0.0;
  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0x59414d41;  // fixed default so runs are reproducible
  SolveLimits limits;
};

// Yama Nim closed forms vs the generic engine on the [0,B]^2 grid.
SuiteResult verify_yama(int grid_bound = 40, const VerifyOptions& opts = {});

// SG of an explicit disjunctive sum vs XOR of component values on random
// small instances.
SuiteResult verify_sum(std::size_t pairs = 200, const VerifyOptions& opts = {});

// Odd-|W1| sink partitions: XOR of sink tokens vs brute-force SG.
SuiteResult verify_g4_odd(std::size_t instances = 500, const VerifyOptions& opts = {});

// Even-|W1| sink partitions: the auxiliary-game combination vs brute force.
SuiteResult verify_g4_even(std::size_t instances = 500, const VerifyOptions& opts = {});

// Diamond closed form on the full token grid.
SuiteResult verify_g5(TokenCount max_x = 12, TokenCount max_y = 8, TokenCount max_z = 7,
                      const VerifyOptions& opts = {});

// Out-star closed form for leaf counts 1..max_n, center tokens up to n + extra_x.
SuiteResult verify_g6(int max_n = 4, TokenCount extra_x = 5, TokenCount max_y = 7,
                      const VerifyOptions& opts = {});

// Auxiliary-game outcomes vs the blocked-sink expansion oracle.
SuiteResult verify_w0(std::size_t instances = 100, const VerifyOptions& opts = {});

// Even move parity in the variable and clause subgraphs, for the whole
// enumerated formula family.
SuiteResult verify_claim_parity(int max_n = 3, int max_m = 2, int max_clause = 3,
                                const VerifyOptions& opts = {});

// Formula winner vs reduction-graph outcome for the same family.
SuiteResult verify_reduction_equiv(int max_n = 3, int max_m = 2, int max_clause = 3,
                                   const VerifyOptions& opts = {});

// Structural audit over the audit family, plus the six-variable example
// formula with its exact vertex count and token placement.
SuiteResult verify_reduction_audit(int max_n = 4, int max_m = 3, int max_clause = 3,
                                   const VerifyOptions& opts = {});

// Strict token descent and playout length <= initial tokens on random
// instances.
SuiteResult verify_termination(std::size_t instances = 1000, const VerifyOptions& opts = {});

// Dispatch by suite id with positional bound overrides; unknown ids throw
// std::invalid_argument.
SuiteResult run_suite(const std::string& suite_id, const std::vector<std::int64_t>& bounds,
                      const VerifyOptions& opts = {});
const std::vector<std::string>& suite_ids();

}  // namespace dyn

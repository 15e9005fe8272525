// Reduction from the positive-CNF selection game to Digraph Yama Nim: builds
// the gadget graph (variable chains, clause fan-outs, collector), audits its
// structural invariants, verifies the even-move-parity claim by exhaustive
// exploration, and cross-checks winners at desk scale.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyn/digraph.hpp"
#include "dyn/poscnf.hpp"

namespace dyn {

struct VertexRole {
  enum class Kind { X, Q, Parity, C, CPath, F, W, WPath };
  Kind kind = Kind::X;
  int index = 0;  // variable or clause number, 1-based; 0 where not applicable
  int path = 0;   // which length-2 path, 1-based; 0 where not applicable
  int step = 0;   // position along Q (1..3) or along a 2-path (1..2)
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

enum class Subgraph { G1, G2, G3 };
Subgraph subgraph_of(const VertexRole& role);

std::string role_to_string(const VertexRole& role);
std::optional<VertexRole> role_from_string(const std::string& text);

struct ReductionGraph {
  Digraph graph;
  Position init;
  std::vector<VertexRole> roles;
};

// The full construction, in canonical vertex order: x(i), then q(i,k), the
// parity vertex when the variable count is odd, c(j), the clause 2-paths,
// f(j), w, and the collector 2-paths. Token placement: x(i) carries
// 2*(d_out(x(i)) + 1), every c(j) and the parity vertex carry one token.
ReductionGraph build_reduction(const PosCnf& f);

struct AuditReport {
  std::vector<std::string> failures;
  int checks_run = 0;
  bool ok() const { return failures.empty(); }
};

// Structural audit: role coverage and local shape per role, the degree
// identities d_out(c(j)) = |C(j)| + 1 and d_out(w) = m - 1, exact token
// placement, acyclicity, and bipartiteness both generically and under the
// explicit class assignment used in the construction.
AuditReport audit_reduction(const ReductionGraph& rg);

struct ClaimParityResult {
  bool holds = true;                 // every playout makes evenly many moves in G1 and in G2
  std::vector<Move> witness;         // a violating playout when !holds
  std::size_t states_explored = 0;
  bool c_played_once = true;         // no clause vertex is ever played twice in a playout
  bool dead_roles_silent = true;     // q(i,2), q(i,3) and 2-path vertices are never playable
};

// Exhaustive exploration over states augmented with the per-subgraph move
// parities (and which clause vertices have been played).
ClaimParityResult verify_claim_even_moves(const ReductionGraph& rg, const SolveLimits& limits = {});

struct EquivalenceReport {
  CnfWinner formula_winner = CnfWinner::P0;
  Outcome dyn_outcome = Outcome::P;
  bool agree = false;  // formula_winner == P1 iff the initial position is N
};

EquivalenceReport check_equivalence(const PosCnf& f, const SolveLimits& limits = {});

}  // namespace dyn

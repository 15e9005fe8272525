// Closed-form classifiers for the solved graph families (complete-to-sinks
// partitions, the diamond, the out-star), shape detection, a dispatching
// classifier, and the blocked-sink oracle construction.
#pragma once

#include <optional>
#include <utility>

#include "dyn/digraph.hpp"

namespace dyn {

// W1 := all sinks, V1 := the rest. Succeeds iff W1 is nonempty and every V1
// vertex has an edge to every sink. Any valid partition must place every
// sink in W1, so this choice is canonical.
std::optional<G4Partition> detect_g4(const Digraph& g);

// Odd |W1|: the SG value is the XOR of the W1 token counts, independent of
// the V1 coordinates.
SgValue classify_g4_odd(const Digraph& g, const G4Partition& part, const Position& p);

// Even |W1|: P iff (auxiliary game P and XOR of W1 tokens = 0) or
// (auxiliary game N and XOR of W1 tokens = 1).
Outcome classify_g4_even(const Digraph& g, const G4Partition& part, const Position& p,
                         const SolveLimits& limits = {});

// Diamond graph v1 -> v2, both -> {w1, w2}.
bool g5_is_p(TokenCount x, TokenCount y, TokenCount z1, TokenCount z2);

// Out-star with n leaves: odd n needs XOR(ys) = 0; even n additionally
// splits on whether the center can be played (x <= n vs x >= n + 1).
bool g6_is_p(int n, TokenCount x, const std::vector<TokenCount>& ys);

struct G5Shape {
  int v1, v2, w1, w2;
};
std::optional<G5Shape> detect_g5(const Digraph& g);

struct G6Shape {
  int center;
  std::vector<int> leaves;
};
std::optional<G6Shape> detect_g6(const Digraph& g);

enum class ClassifyMethod { g5_closed, g6_closed, g4_odd, g4_even, brute_force };
const char* to_string(ClassifyMethod m);

struct ClassificationResult {
  Outcome outcome = Outcome::P;
  std::optional<SgValue> sg;  // present for g4_odd and brute_force only
  ClassifyMethod method = ClassifyMethod::brute_force;
};

// Tries, in order: exact G5 shape, exact G6 shape, sink partition (odd then
// even |W1|), and finally exhaustive search.
ClassificationResult classify_auto(const Digraph& g, const Position& p,
                                   const SolveLimits& limits = {});

// Independent oracle for the auxiliary game: keep the graph but fan every W1
// vertex out to `fresh` new sinks, so it can never be played (it would need
// fresh + 1 > total tokens). W1 token counts are dropped; V1 positions play
// exactly the auxiliary game. Default fresh count is total_tokens(p) + 1.
std::pair<Digraph, Position> w0_expansion(const Digraph& g, const G4Partition& part,
                                          const Position& p,
                                          std::optional<TokenCount> fresh = std::nullopt);

}  // namespace dyn

#include "dyn/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyn {

namespace {

void require_valid_partition(const Digraph& g, const G4Partition& part) {
  const ValidationReport report = validate_g4_partition(g, part);
  if (!report.ok()) {
    throw std::invalid_argument("invalid G4 partition: " + report.issues.front());
  }
}

SgValue xor_w1_tokens(const G4Partition& part, const Position& p) {
  SgValue acc = 0;
  for (int w : part.w1) acc ^= p.at(static_cast<std::size_t>(w));
  return acc;
}

}  // namespace

std::optional<G4Partition> detect_g4(const Digraph& g) {
  G4Partition part;
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v) {
    (g.is_sink(v) ? part.w1 : part.v1).push_back(v);
  }
  if (part.w1.empty()) return std::nullopt;
  for (int v : part.v1) {
    for (int w : part.w1) {
      if (!g.has_edge(v, w)) return std::nullopt;
    }
  }
  return part;
}

SgValue classify_g4_odd(const Digraph& g, const G4Partition& part, const Position& p) {
  require_valid_partition(g, part);
  if (part.w1.size() % 2 == 0) {
    throw std::invalid_argument("classify_g4_odd requires an odd |W1|");
  }
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("position length does not match vertex count");
  }
  return xor_w1_tokens(part, p);
}

Outcome classify_g4_even(const Digraph& g, const G4Partition& part, const Position& p,
                         const SolveLimits& limits) {
  require_valid_partition(g, part);
  if (part.w1.size() % 2 != 0) {
    throw std::invalid_argument("classify_g4_even requires an even |W1|");
  }
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("position length does not match vertex count");
  }
  const Outcome aux = aux_outcome(g, part, project_v1(part, p), limits);
  const SgValue w_xor = xor_w1_tokens(part, p);
  const bool is_p = (aux == Outcome::P && w_xor == 0) || (aux == Outcome::N && w_xor == 1);
  return is_p ? Outcome::P : Outcome::N;
}

bool g5_is_p(TokenCount x, TokenCount y, TokenCount z1, TokenCount z2) {
  const TokenCount lo = 2 * (x / 4);
  const bool in_band = lo <= y && y <= lo + 2;
  const SgValue z_xor = z1 ^ z2;
  return (in_band && z_xor == 0) || (!in_band && z_xor == 1);
}

bool g6_is_p(int n, TokenCount x, const std::vector<TokenCount>& ys) {
  if (n < 1) throw std::invalid_argument("g6_is_p requires n >= 1");
  if (ys.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("g6_is_p: leaf token count does not match n");
  }
  SgValue y_xor = 0;
  for (TokenCount y : ys) y_xor ^= y;
  if (n % 2 == 1) return y_xor == 0;
  return (x <= n && y_xor == 0) || (x >= n + 1 && y_xor == 1);
}

std::optional<G5Shape> detect_g5(const Digraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 5) return std::nullopt;
  if (!validate_graph(g).ok()) return std::nullopt;
  int v1 = -1, v2 = -1;
  std::vector<int> sinks;
  for (int v = 0; v < 4; ++v) {
    switch (g.out_degree(v)) {
      case 3: if (v1 >= 0) return std::nullopt; v1 = v; break;
      case 2: if (v2 >= 0) return std::nullopt; v2 = v; break;
      case 0: sinks.push_back(v); break;
      default: return std::nullopt;
    }
  }
  if (v1 < 0 || v2 < 0 || sinks.size() != 2) return std::nullopt;
  if (!g.has_edge(v1, v2)) return std::nullopt;
  for (int w : sinks) {
    if (!g.has_edge(v1, w) || !g.has_edge(v2, w)) return std::nullopt;
  }
  return G5Shape{v1, v2, sinks[0], sinks[1]};
}

std::optional<G6Shape> detect_g6(const Digraph& g) {
  const int total = static_cast<int>(g.vertex_count());
  if (total < 2) return std::nullopt;
  if (!validate_graph(g).ok()) return std::nullopt;
  int center = -1;
  std::vector<int> leaves;
  for (int v = 0; v < total; ++v) {
    if (g.is_sink(v)) {
      leaves.push_back(v);
    } else {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  if (center < 0 || g.out_degree(center) != total - 1) return std::nullopt;
  for (int w : leaves) {
    if (!g.has_edge(center, w)) return std::nullopt;
  }
  return G6Shape{center, std::move(leaves)};
}

const char* to_string(ClassifyMethod m) {
  switch (m) {
    case ClassifyMethod::g5_closed: return "g5_closed";
    case ClassifyMethod::g6_closed: return "g6_closed";
    case ClassifyMethod::g4_odd: return "g4_odd";
    case ClassifyMethod::g4_even: return "g4_even";
    case ClassifyMethod::brute_force: return "brute_force";
  }
  return "unknown";
}

ClassificationResult classify_auto(const Digraph& g, const Position& p,
                                   const SolveLimits& limits) {
  if (const ValidationReport report = validate_graph(g); !report.ok()) {
    throw std::invalid_argument("invalid digraph: " + report.issues.front());
  }
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("position length does not match vertex count");
  }

  if (const auto g5 = detect_g5(g)) {
    const bool is_p = g5_is_p(p[static_cast<std::size_t>(g5->v1)], p[static_cast<std::size_t>(g5->v2)],
                              p[static_cast<std::size_t>(g5->w1)], p[static_cast<std::size_t>(g5->w2)]);
    return {is_p ? Outcome::P : Outcome::N, std::nullopt, ClassifyMethod::g5_closed};
  }
  if (const auto g6 = detect_g6(g)) {
    std::vector<TokenCount> ys;
    for (int w : g6->leaves) ys.push_back(p[static_cast<std::size_t>(w)]);
    const bool is_p = g6_is_p(static_cast<int>(ys.size()), p[static_cast<std::size_t>(g6->center)], ys);
    return {is_p ? Outcome::P : Outcome::N, std::nullopt, ClassifyMethod::g6_closed};
  }
  if (const auto part = detect_g4(g)) {
    if (part->w1.size() % 2 == 1) {
      const SgValue sg = classify_g4_odd(g, *part, p);
      return {sg == 0 ? Outcome::P : Outcome::N, sg, ClassifyMethod::g4_odd};
    }
    return {classify_g4_even(g, *part, p, limits), std::nullopt, ClassifyMethod::g4_even};
  }

  const DynRules rules(g);
  const SgValue sg = sg_value(rules, p, limits);
  return {sg == 0 ? Outcome::P : Outcome::N, sg, ClassifyMethod::brute_force};
}

std::pair<Digraph, Position> w0_expansion(const Digraph& g, const G4Partition& part,
                                          const Position& p, std::optional<TokenCount> fresh) {
  require_valid_partition(g, part);
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("position length does not match vertex count");
  }
  const TokenCount total = total_tokens(p);
  const TokenCount fresh_count = fresh.value_or(total + 1);
  if (fresh_count <= total) {
    throw std::invalid_argument("fresh sink count must exceed the total token count");
  }

  Digraph h = g;
  Position q = p;
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(fresh_count));
  for (TokenCount k = 0; k < fresh_count; ++k) {
    pool.push_back(h.add_vertex("u" + std::to_string(k + 1)));
    q.push_back(0);
  }
  // Fanning a W1 vertex into the pool raises its out-degree past any
  // reachable token count, so it can never be played; its tokens are junk.
  for (int w : part.w1) {
    q[static_cast<std::size_t>(w)] = 0;
    for (int u : pool) h.add_edge(w, u);
  }
  return {std::move(h), std::move(q)};
}

}  // namespace dyn

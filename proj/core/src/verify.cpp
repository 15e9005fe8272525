#include "dyn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "dyn/digraph.hpp"
#include "dyn/poscnf.hpp"
#include "dyn/reduction.hpp"
#include "dyn/structure.hpp"
#include "dyn/yama.hpp"

namespace dyn {

namespace {

std::string position_to_string(const Position& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string edges_to_string(const Digraph& g) {
  std::string out = "[";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (int u : g.out_neighbors(static_cast<int>(v))) {
      if (out.size() > 1) out += ",";
      out += "(" + std::to_string(v) + "," + std::to_string(u) + ")";
    }
  }
  return out + "]";
}

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult res;
  res.suite = name;
  const auto start = std::chrono::steady_clock::now();
  body(res);
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

void record_failure(SuiteResult& res, const std::string& detail) {
  if (res.failures == 0) res.first_counterexample = detail;
  ++res.failures;
}

Position random_tokens(std::mt19937_64& rng, std::size_t n, TokenCount max_value) {
  std::uniform_int_distribution<TokenCount> dist(0, max_value);
  Position p(n);
  for (auto& v : p) v = dist(rng);
  return p;
}

Digraph random_digraph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> size_dist(1, max_vertices);
  std::bernoulli_distribution edge(0.5);
  const int n = size_dist(rng);
  Digraph g(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && edge(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

struct G4Instance {
  Digraph g;
  G4Partition part;
};

// |V1| in 1..v1_max with random internal edges, |W1| drawn from w1_sizes,
// complete V1 -> W1 edges, W1 vertices are sinks.
G4Instance random_g4(std::mt19937_64& rng, int v1_max, const std::vector<int>& w1_sizes) {
  std::uniform_int_distribution<int> v1_dist(1, v1_max);
  std::uniform_int_distribution<std::size_t> w1_pick(0, w1_sizes.size() - 1);
  std::bernoulli_distribution edge(0.5);
  const int v1_count = v1_dist(rng);
  const int w1_count = w1_sizes[w1_pick(rng)];

  G4Instance inst;
  inst.g = Digraph(static_cast<std::size_t>(v1_count + w1_count));
  for (int a = 0; a < v1_count; ++a) {
    for (int b = 0; b < v1_count; ++b) {
      if (a != b && edge(rng)) inst.g.add_edge(a, b);
    }
  }
  for (int a = 0; a < v1_count; ++a) {
    for (int b = 0; b < w1_count; ++b) inst.g.add_edge(a, v1_count + b);
  }
  for (int a = 0; a < v1_count; ++a) inst.part.v1.push_back(a);
  for (int b = 0; b < w1_count; ++b) inst.part.w1.push_back(v1_count + b);
  return inst;
}

Digraph g5_graph() {
  return Digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Digraph g6_graph(int n) {
  Digraph g(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) g.add_edge(0, k);
  return g;
}

}  // namespace

SuiteResult verify_yama(int grid_bound, const VerifyOptions& opts) {
  return timed("yama", [&](SuiteResult& res) {
    const YamaRules rules;
    MemoTable memo;
    for (TokenCount x = 0; x <= grid_bound; ++x) {
      for (TokenCount y = 0; y <= grid_bound; ++y) {
        const YamaPosition p{x, y};
        const SgValue closed = yama_sg(p);
        const SgValue brute = sg_value(rules, {x, y}, memo, opts.limits);
        ++res.checked;
        if (closed != brute) {
          record_failure(res, "sg(" + std::to_string(x) + "," + std::to_string(y) + "): closed form " +
                                  std::to_string(closed) + ", engine " + std::to_string(brute));
        } else if (yama_is_p(p) != (brute == 0)) {
          record_failure(res, "P-band disagrees with SG at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
        }
      }
    }
  });
}

SuiteResult verify_sum(std::size_t pairs, const VerifyOptions& opts) {
  return timed("sum", [&](SuiteResult& res) {
    std::mt19937_64 rng(opts.seed);
    for (std::size_t k = 0; k < pairs; ++k) {
      const Digraph g1 = random_digraph(rng, 3);
      const Digraph g2 = random_digraph(rng, 3);
      const Position p1 = random_tokens(rng, g1.vertex_count(), 5);
      const Position p2 = random_tokens(rng, g2.vertex_count(), 5);
      const DynRules r1(g1);
      const DynRules r2(g2);
      const SumRules sum(r1, p1.size(), r2, p2.size());
      const SgValue direct = sg_value(sum, sum.combine(p1, p2), opts.limits);
      const SgValue xored = sum_sg(r1, p1, r2, p2, opts.limits);
      ++res.checked;
      if (direct != xored) {
        record_failure(res, "g1=" + edges_to_string(g1) + " p1=" + position_to_string(p1) +
                                " g2=" + edges_to_string(g2) + " p2=" + position_to_string(p2) +
                                ": sum solve " + std::to_string(direct) + ", xor " + std::to_string(xored));
      }
    }
  });
}

SuiteResult verify_g4_odd(std::size_t instances, const VerifyOptions& opts) {
  return timed("g4-odd", [&](SuiteResult& res) {
    std::mt19937_64 rng(opts.seed + 1);
    for (std::size_t k = 0; k < instances; ++k) {
      const G4Instance inst = random_g4(rng, 3, {1, 3});
      const Position p = random_tokens(rng, inst.g.vertex_count(), 6);
      const SgValue closed = classify_g4_odd(inst.g, inst.part, p);
      const SgValue brute = sg_value(DynRules(inst.g), p, opts.limits);
      ++res.checked;
      if (closed != brute) {
        record_failure(res, "edges=" + edges_to_string(inst.g) + " tokens=" + position_to_string(p) +
                                ": closed form " + std::to_string(closed) + ", engine " +
                                std::to_string(brute));
      }
    }
  });
}

SuiteResult verify_g4_even(std::size_t instances, const VerifyOptions& opts) {
  return timed("g4-even", [&](SuiteResult& res) {
    std::mt19937_64 rng(opts.seed + 2);
    for (std::size_t k = 0; k < instances; ++k) {
      const G4Instance inst = random_g4(rng, 3, {2, 4});
      const Position p = random_tokens(rng, inst.g.vertex_count(), 6);
      const Outcome closed = classify_g4_even(inst.g, inst.part, p, opts.limits);
      const Outcome brute = outcome(DynRules(inst.g), p, opts.limits);
      ++res.checked;
      if (closed != brute) {
        record_failure(res, "edges=" + edges_to_string(inst.g) + " tokens=" + position_to_string(p) +
                                ": closed form " + std::string(to_string(closed)) + ", engine " +
                                to_string(brute));
      }
    }
  });
}

SuiteResult verify_g5(TokenCount max_x, TokenCount max_y, TokenCount max_z,
                      const VerifyOptions& opts) {
  return timed("g5", [&](SuiteResult& res) {
    const DynRules rules(g5_graph());
    MemoTable memo;
    for (TokenCount x = 0; x <= max_x; ++x) {
      for (TokenCount y = 0; y <= max_y; ++y) {
        for (TokenCount z1 = 0; z1 <= max_z; ++z1) {
          for (TokenCount z2 = 0; z2 <= max_z; ++z2) {
            const bool closed = g5_is_p(x, y, z1, z2);
            const bool brute = sg_value(rules, {x, y, z1, z2}, memo, opts.limits) == 0;
            ++res.checked;
            if (closed != brute) {
              record_failure(res, "position " + position_to_string({x, y, z1, z2}) + ": closed form " +
                                      (closed ? "P" : "N") + ", engine " + (brute ? "P" : "N"));
            }
          }
        }
      }
    }
  });
}

SuiteResult verify_g6(int max_n, TokenCount extra_x, TokenCount max_y, const VerifyOptions& opts) {
  return timed("g6", [&](SuiteResult& res) {
    for (int n = 1; n <= max_n; ++n) {
      const DynRules rules(g6_graph(n));
      MemoTable memo;
      Position p(static_cast<std::size_t>(n) + 1, 0);
      const auto sweep = [&](auto&& self, int leaf) -> void {
        if (leaf > n) {
          std::vector<TokenCount> ys(p.begin() + 1, p.end());
          for (TokenCount x = 0; x <= n + extra_x; ++x) {
            p[0] = x;
            const bool closed = g6_is_p(n, x, ys);
            const bool brute = sg_value(rules, p, memo, opts.limits) == 0;
            ++res.checked;
            if (closed != brute) {
              record_failure(res, "n=" + std::to_string(n) + " position " + position_to_string(p) +
                                      ": closed form " + (closed ? "P" : "N") + ", engine " +
                                      (brute ? "P" : "N"));
            }
          }
          p[0] = 0;
          return;
        }
        for (TokenCount y = 0; y <= max_y; ++y) {
          p[static_cast<std::size_t>(leaf)] = y;
          self(self, leaf + 1);
        }
        p[static_cast<std::size_t>(leaf)] = 0;
      };
      sweep(sweep, 1);
    }
  });
}

SuiteResult verify_w0(std::size_t instances, const VerifyOptions& opts) {
  return timed("w0", [&](SuiteResult& res) {
    std::mt19937_64 rng(opts.seed + 3);
    for (std::size_t k = 0; k < instances; ++k) {
      const G4Instance inst = random_g4(rng, 3, {1, 2, 3});
      const Position p = random_tokens(rng, inst.g.vertex_count(), 6);
      const Outcome aux = aux_outcome(inst.g, inst.part, project_v1(inst.part, p), opts.limits);
      const auto [expanded, start] = w0_expansion(inst.g, inst.part, p);
      const Outcome oracle = outcome(DynRules(expanded), start, opts.limits);
      ++res.checked;
      if (aux != oracle) {
        record_failure(res, "edges=" + edges_to_string(inst.g) + " tokens=" + position_to_string(p) +
                                ": auxiliary game " + std::string(to_string(aux)) + ", expansion " +
                                to_string(oracle));
      }
    }
  });
}

SuiteResult verify_claim_parity(int max_n, int max_m, int max_clause, const VerifyOptions& opts) {
  return timed("claim-parity", [&](SuiteResult& res) {
    for (const PosCnf& f : enumerate_poscnf(max_n, max_m, max_clause)) {
      const ReductionGraph rg = build_reduction(f);
      const ClaimParityResult claim = verify_claim_even_moves(rg, opts.limits);
      ++res.checked;
      if (!claim.holds) {
        record_failure(res, "odd move parity for " + to_poscnf_text(f) + " (playout length " +
                                std::to_string(claim.witness.size()) + ")");
      } else if (!claim.c_played_once) {
        record_failure(res, "a clause vertex was played twice for " + to_poscnf_text(f));
      } else if (!claim.dead_roles_silent) {
        record_failure(res, "a path vertex became playable for " + to_poscnf_text(f));
      }
    }
  });
}

SuiteResult verify_reduction_equiv(int max_n, int max_m, int max_clause, const VerifyOptions& opts) {
  return timed("reduction-equiv", [&](SuiteResult& res) {
    for (const PosCnf& f : enumerate_poscnf(max_n, max_m, max_clause)) {
      const EquivalenceReport rep = check_equivalence(f, opts.limits);
      ++res.checked;
      if (!rep.agree) {
        record_failure(res, "formula " + to_poscnf_text(f) + ": winner " +
                                to_string(rep.formula_winner) + " but reduction graph is " +
                                to_string(rep.dyn_outcome));
      }
    }
  });
}

SuiteResult verify_reduction_audit(int max_n, int max_m, int max_clause, const VerifyOptions& opts) {
  (void)opts;
  return timed("reduction-audit", [&](SuiteResult& res) {
    std::vector<PosCnf> family = enumerate_poscnf(max_n, max_m, max_clause);

    // The running example: x1 and (x2 or x3 or x4) and (x2 or x5 or x6).
    PosCnf example;
    example.n = 6;
    example.clauses = {{1}, {2, 3, 4}, {2, 5, 6}};
    family.push_back(example);

    for (const PosCnf& f : family) {
      const ReductionGraph rg = build_reduction(f);
      const AuditReport audit = audit_reduction(rg);
      ++res.checked;
      if (!audit.ok()) {
        record_failure(res, "audit of " + to_poscnf_text(f) + ": " + audit.failures.front());
      }
    }

    const ReductionGraph rg = build_reduction(example);
    ++res.checked;
    if (rg.graph.vertex_count() != 43) {
      record_failure(res, "example formula built " + std::to_string(rg.graph.vertex_count()) +
                              " vertices, expected 43");
    }
    // Token placement recomputed straight from the formula: each variable
    // vertex has one path edge plus one edge per containing clause.
    for (int i = 1; i <= example.n; ++i) {
      int clause_uses = 0;
      for (const auto& clause : example.clauses) {
        if (std::find(clause.begin(), clause.end(), i) != clause.end()) ++clause_uses;
      }
      const TokenCount expect = 2 * (1 + clause_uses + 1);
      const int vertex = *rg.graph.vertex_by_label("x" + std::to_string(i));
      ++res.checked;
      if (rg.init[static_cast<std::size_t>(vertex)] != expect) {
        record_failure(res, "x" + std::to_string(i) + " starts with " +
                                std::to_string(rg.init[static_cast<std::size_t>(vertex)]) +
                                " tokens, expected " + std::to_string(expect));
      }
    }
    TokenCount total = total_tokens(rg.init);
    TokenCount expected_total = 0;
    for (int i = 1; i <= example.n; ++i) {
      int clause_uses = 0;
      for (const auto& clause : example.clauses) {
        if (std::find(clause.begin(), clause.end(), i) != clause.end()) ++clause_uses;
      }
      expected_total += 2 * (2 + clause_uses);
    }
    expected_total += static_cast<TokenCount>(example.clauses.size());  // one per clause vertex
    ++res.checked;
    if (total != expected_total) {
      record_failure(res, "example formula places " + std::to_string(total) + " tokens, expected " +
                              std::to_string(expected_total));
    }
  });
}

SuiteResult verify_termination(std::size_t instances, const VerifyOptions& opts) {
  return timed("termination", [&](SuiteResult& res) {
    std::mt19937_64 rng(opts.seed + 4);
    for (std::size_t k = 0; k < instances; ++k) {
      const Digraph g = random_digraph(rng, 4);
      const Position p = random_tokens(rng, g.vertex_count(), 6);
      ++res.checked;
      bool bad = false;
      for (const auto& [move, succ] : dyn_moves(g, p)) {
        if (total_tokens(succ) >= total_tokens(p)) {
          record_failure(res, "move at vertex " + std::to_string(move.vertex) + " of " +
                                  position_to_string(p) + " does not shed tokens");
          bad = true;
          break;
        }
      }
      if (bad) continue;
      // max_playout_length revisits every reachable edge and rechecks the
      // strictly decreasing measure as it goes.
      const DynRules rules(g);
      const std::int64_t depth = max_playout_length(rules, p, opts.limits);
      if (depth > total_tokens(p)) {
        record_failure(res, "playout of length " + std::to_string(depth) + " from " +
                                position_to_string(p) + " exceeds its token count");
      }
    }
  });
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "yama", "sum", "g4-odd", "g4-even", "g5", "g6", "w0",
      "claim-parity", "reduction-equiv", "reduction-audit", "termination"};
  return ids;
}

SuiteResult run_suite(const std::string& suite_id, const std::vector<std::int64_t>& bounds,
                      const VerifyOptions& opts) {
  auto bound = [&](std::size_t idx, std::int64_t fallback) {
    if (idx < bounds.size()) {
      if (bounds[idx] < 0) throw std::invalid_argument("bounds must be non-negative");
      return bounds[idx];
    }
    return fallback;
  };

  if (suite_id == "yama") return verify_yama(static_cast<int>(bound(0, 40)), opts);
  if (suite_id == "sum") return verify_sum(static_cast<std::size_t>(bound(0, 200)), opts);
  if (suite_id == "g4-odd") return verify_g4_odd(static_cast<std::size_t>(bound(0, 500)), opts);
  if (suite_id == "g4-even") return verify_g4_even(static_cast<std::size_t>(bound(0, 500)), opts);
  if (suite_id == "g5") return verify_g5(bound(0, 12), bound(1, 8), bound(2, 7), opts);
  if (suite_id == "g6") {
    return verify_g6(static_cast<int>(bound(0, 4)), bound(1, 5), bound(2, 7), opts);
  }
  if (suite_id == "w0") return verify_w0(static_cast<std::size_t>(bound(0, 100)), opts);
  if (suite_id == "claim-parity") {
    return verify_claim_parity(static_cast<int>(bound(0, 3)), static_cast<int>(bound(1, 2)),
                               static_cast<int>(bound(2, 3)), opts);
  }
  if (suite_id == "reduction-equiv") {
    return verify_reduction_equiv(static_cast<int>(bound(0, 3)), static_cast<int>(bound(1, 2)),
                                  static_cast<int>(bound(2, 3)), opts);
  }
  if (suite_id == "reduction-audit") {
    return verify_reduction_audit(static_cast<int>(bound(0, 4)), static_cast<int>(bound(1, 3)),
                                  static_cast<int>(bound(2, 3)), opts);
  }
  if (suite_id == "termination") {
    return verify_termination(static_cast<std::size_t>(bound(0, 1000)), opts);
  }
  throw std::invalid_argument("unknown suite '" + suite_id + "'");
}

}  // namespace dyn

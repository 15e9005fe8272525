// Command-line front end: solving, classification, theorem-verification
// suites and the CNF reduction pipeline.
//
// Exit codes: 0 ok, 2 input error, 3 resource cap exceeded, 4 verification
// mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyn/digraph.hpp"
#include "dyn/game_core.hpp"
#include "dyn/io.hpp"
#include "dyn/poscnf.hpp"
#include "dyn/reduction.hpp"
#include "dyn/structure.hpp"
#include "dyn/verify.hpp"
#include "dyn/yama.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

using json = nlohmann::ordered_json;

struct CommonOpts {
  bool json_output = false;
  std::size_t max_states = 10'000'000;

  dyn::SolveLimits limits() const { return {max_states}; }
};

std::size_t default_max_states() {
  if (const char* env = std::getenv("DYN_MAX_STATES")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 10'000'000;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.json_output, "Emit machine-readable JSON instead of text");
  cmd->add_option("--max-states", opts.max_states,
                  "Abort exhaustive solves after this many states (exit 3)")
      ->capture_default_str();
}

dyn::GraphFile load_validated(const std::string& path) {
  dyn::GraphFile gf = dyn::load_graph_file(path);
  const dyn::ValidationReport report = dyn::validate_graph(gf.graph);
  if (!report.ok()) {
    std::string msg = "invalid graph in '" + path + "':";
    for (const std::string& issue : report.issues) msg += "\n  " + issue;
    throw dyn::FileFormatError(msg);
  }
  return gf;
}

dyn::Position position_from_args(const dyn::Digraph& g, const std::vector<std::int64_t>& counts) {
  if (counts.size() != g.vertex_count()) {
    throw std::invalid_argument("expected " + std::to_string(g.vertex_count()) +
                                " token counts, got " + std::to_string(counts.size()));
  }
  for (std::int64_t v : counts) {
    if (v < 0) throw std::invalid_argument("token counts must be non-negative");
  }
  return dyn::Position(counts.begin(), counts.end());
}

std::string position_text(const dyn::Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

json position_json(const dyn::Position& p) {
  json arr = json::array();
  for (auto v : p) arr.push_back(v);
  return arr;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dyn::FileFormatError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_sg(const std::string& graph_path, const std::vector<std::int64_t>& counts,
           const CommonOpts& opts) {
  const dyn::GraphFile gf = load_validated(graph_path);
  const dyn::Position p = position_from_args(gf.graph, counts);
  const dyn::SgValue sg = dyn::sg_value(dyn::DynRules(gf.graph), p, opts.limits());
  if (opts.json_output) {
    json out{{"command", "sg"}, {"sg", sg}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << sg << '\n';
  }
  return kExitOk;
}

int cmd_outcome(const std::string& graph_path, const std::vector<std::int64_t>& counts,
                bool want_move, const CommonOpts& opts) {
  const dyn::GraphFile gf = load_validated(graph_path);
  const dyn::Position p = position_from_args(gf.graph, counts);
  const dyn::DynRules rules(gf.graph);
  const dyn::Outcome verdict = dyn::outcome(rules, p, opts.limits());

  std::optional<dyn::Move> move;
  std::optional<dyn::Position> successor;
  if (want_move && verdict == dyn::Outcome::N) {
    dyn::MemoTable memo;
    dyn::sg_value(rules, p, memo, opts.limits());
    for (const auto& [m, succ] : dyn::dyn_moves(gf.graph, p)) {
      if (memo.at(succ) == 0) {
        move = m;
        successor = succ;
        break;
      }
    }
  }

  if (opts.json_output) {
    json out{{"command", "outcome"}, {"outcome", dyn::to_string(verdict)}};
    if (move) {
      out["move"] = {{"vertex", gf.graph.label(move->vertex)}, {"take", move->removed}};
      out["successor"] = position_json(*successor);
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << dyn::to_string(verdict) << '\n';
    if (move) {
      std::cout << "move: " << gf.graph.label(move->vertex) << " take " << move->removed << '\n';
      std::cout << "successor: " << position_text(*successor) << '\n';
    }
  }
  return kExitOk;
}

int cmd_classify(const std::string& graph_path, const std::vector<std::int64_t>& counts,
                 bool verify, const CommonOpts& opts) {
  const dyn::GraphFile gf = load_validated(graph_path);
  const dyn::Position p = position_from_args(gf.graph, counts);
  const dyn::ClassificationResult result = dyn::classify_auto(gf.graph, p, opts.limits());

  bool verified_ok = true;
  if (verify) {
    const dyn::Outcome brute = dyn::outcome(dyn::DynRules(gf.graph), p, opts.limits());
    verified_ok = brute == result.outcome;
  }

  if (opts.json_output) {
    json out{{"command", "classify"},
             {"method", dyn::to_string(result.method)},
             {"outcome", dyn::to_string(result.outcome)}};
    if (result.sg) out["sg"] = *result.sg;
    if (verify) out["verified"] = verified_ok;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "method: " << dyn::to_string(result.method) << '\n';
    std::cout << "outcome: " << dyn::to_string(result.outcome) << '\n';
    if (result.sg) std::cout << "sg: " << *result.sg << '\n';
    if (verify) std::cout << "verify: " << (verified_ok ? "ok" : "MISMATCH") << '\n';
  }
  return verified_ok ? kExitOk : kExitMismatch;
}

int cmd_yama(const std::vector<std::string>& args, const CommonOpts& opts) {
  auto parse_count = [](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
    }
    if (used != s.size() || v < 0) {
      throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
    }
    return static_cast<dyn::TokenCount>(v);
  };

  if (args.size() == 2 && args[0] == "table") {
    const dyn::TokenCount bound = parse_count(args[1]);
    if (opts.json_output) {
      json grid = json::array();
      for (dyn::TokenCount x = 0; x <= bound; ++x) {
        json row = json::array();
        for (dyn::TokenCount y = 0; y <= bound; ++y) row.push_back(dyn::yama_sg({x, y}));
        grid.push_back(std::move(row));
      }
      json out{{"command", "yama_table"}, {"bound", bound}, {"grid", grid}};
      std::cout << out.dump() << '\n';
    } else {
      for (dyn::TokenCount x = 0; x <= bound; ++x) {
        for (dyn::TokenCount y = 0; y <= bound; ++y) {
          if (y) std::cout << ' ';
          std::cout << dyn::yama_sg({x, y});
        }
        std::cout << '\n';
      }
    }
    return kExitOk;
  }

  if (args.size() != 2) {
    throw std::invalid_argument("usage: yama <x> <y>  or  yama table <B>");
  }
  const dyn::YamaPosition p{parse_count(args[0]), parse_count(args[1])};
  if (opts.json_output) {
    json out{{"command", "yama"}, {"x", p.x}, {"y", p.y}, {"sg", dyn::yama_sg(p)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << dyn::yama_sg(p) << '\n';
  }
  return kExitOk;
}

int cmd_poscnf(const std::string& cnf_path, const CommonOpts& opts) {
  const dyn::PosCnf f = dyn::parse_poscnf(read_text_file(cnf_path));
  const dyn::CnfWinner winner = dyn::poscnf_winner(f);
  if (opts.json_output) {
    json out{{"command", "poscnf"}, {"winner", dyn::to_string(winner)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << dyn::to_string(winner) << '\n';
  }
  return kExitOk;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path, const CommonOpts& opts) {
  const dyn::PosCnf f = dyn::parse_poscnf(read_text_file(cnf_path));
  const dyn::ReductionGraph rg = dyn::build_reduction(f);
  const dyn::GraphFile gf{rg.graph, rg.init, rg.roles};
  const std::string text = dyn::write_graph_file(gf);

  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) throw dyn::FileFormatError("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out) throw dyn::FileFormatError("failed writing '" + out_path + "'");

  if (opts.json_output) {
    json summary{{"command", "reduce"},
                 {"output", out_path},
                 {"vertices", rg.graph.vertex_count()},
                 {"edges", rg.graph.edge_count()},
                 {"tokens", dyn::total_tokens(rg.init)}};
    std::cout << summary.dump() << '\n';
  } else {
    std::cout << "wrote " << out_path << " (" << rg.graph.vertex_count() << " vertices, "
              << rg.graph.edge_count() << " edges, " << dyn::total_tokens(rg.init) << " tokens)\n";
  }
  return kExitOk;
}

int cmd_check_reduction(const std::string& cnf_path, const CommonOpts& opts) {
  const dyn::PosCnf f = dyn::parse_poscnf(read_text_file(cnf_path));
  const dyn::ReductionGraph rg = dyn::build_reduction(f);
  const dyn::AuditReport audit = dyn::audit_reduction(rg);
  const dyn::ClaimParityResult claim = dyn::verify_claim_even_moves(rg, opts.limits());
  const dyn::EquivalenceReport equiv = dyn::check_equivalence(f, opts.limits());

  const bool claim_ok = claim.holds && claim.c_played_once && claim.dead_roles_silent;
  const bool all_ok = audit.ok() && claim_ok && equiv.agree;

  if (opts.json_output) {
    json out{{"command", "check_reduction"},
             {"formula_winner", dyn::to_string(equiv.formula_winner)},
             {"dyn_outcome", dyn::to_string(equiv.dyn_outcome)},
             {"agree", equiv.agree},
             {"audit_ok", audit.ok()},
             {"audit_checks", audit.checks_run},
             {"claim_parity_ok", claim_ok},
             {"states_explored", claim.states_explored}};
    if (!audit.ok()) out["audit_failures"] = audit.failures;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "formula_winner: " << dyn::to_string(equiv.formula_winner) << '\n';
    std::cout << "dyn_outcome: " << dyn::to_string(equiv.dyn_outcome) << '\n';
    std::cout << "agree: " << (equiv.agree ? "yes" : "NO") << '\n';
    std::cout << "audit: " << (audit.ok() ? "ok" : "FAILED") << " (checks=" << audit.checks_run
              << ")\n";
    for (const std::string& failure : audit.failures) std::cout << "  " << failure << '\n';
    std::cout << "claim_parity: " << (claim_ok ? "ok" : "FAILED")
              << " (states=" << claim.states_explored << ")\n";
    if (!claim.holds) {
      std::cout << "violating playout:";
      for (const dyn::Move& m : claim.witness) {
        std::cout << ' ' << rg.graph.label(m.vertex) << '-' << m.removed;
      }
      std::cout << '\n';
    }
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& suite, const std::vector<std::int64_t>& bounds,
               std::uint64_t seed, const CommonOpts& opts) {
  dyn::VerifyOptions vopts;
  vopts.seed = seed;
  vopts.limits = opts.limits();
  const dyn::SuiteResult result = dyn::run_suite(suite, bounds, vopts);

  if (opts.json_output) {
    json out{{"command", "verify"},
             {"suite", result.suite},
             {"checked", result.checked},
             {"failures", result.failures},
             {"elapsed_s", result.elapsed_seconds},
             {"passed", result.passed()}};
    if (!result.passed()) out["first_counterexample"] = result.first_counterexample;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "suite: " << result.suite << '\n';
    std::cout << "checked: " << result.checked << '\n';
    std::cout << "failures: " << result.failures << '\n';
    std::cout << "elapsed_s: " << result.elapsed_seconds << '\n';
    if (!result.passed()) {
      std::cout << "first_counterexample: " << result.first_counterexample << '\n';
    }
    std::cout << "result: " << (result.passed() ? "pass" : "FAIL") << '\n';
  }
  return result.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph Yama Nim: exhaustive solving, closed-form classification and\n"
               "verification of the solved cases and the CNF reduction"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.max_states = default_max_states();

  // sg
  std::string sg_graph;
  std::vector<std::int64_t> sg_tokens;
  CLI::App* sg = app.add_subcommand("sg", "Sprague-Grundy value of a position");
  sg->add_option("graph", sg_graph, "Graph file (JSON)")->required();
  sg->add_option("tokens", sg_tokens, "Token counts in vertex-file order")->required();
  add_common(sg, opts);

  // outcome
  std::string outcome_graph;
  std::vector<std::int64_t> outcome_tokens;
  bool outcome_move = false;
  CLI::App* outc = app.add_subcommand("outcome", "P/N verdict of a position");
  outc->add_option("graph", outcome_graph, "Graph file (JSON)")->required();
  outc->add_option("tokens", outcome_tokens, "Token counts in vertex-file order")->required();
  outc->add_flag("--move", outcome_move, "Also print a winning move for N-positions");
  add_common(outc, opts);

  // classify
  std::string classify_graph;
  std::vector<std::int64_t> classify_tokens;
  bool classify_verify = false;
  CLI::App* classify = app.add_subcommand("classify", "Closed-form classification when a solved shape applies");
  classify->add_option("graph", classify_graph, "Graph file (JSON)")->required();
  classify->add_option("tokens", classify_tokens, "Token counts in vertex-file order")->required();
  classify->add_flag("--verify", classify_verify, "Cross-check against exhaustive search (exit 4 on mismatch)");
  add_common(classify, opts);

  // yama
  std::vector<std::string> yama_args;
  CLI::App* yama = app.add_subcommand("yama", "Yama Nim closed forms: 'yama <x> <y>' or 'yama table <B>'");
  yama->add_option("args", yama_args, "x y, or: table B")->expected(2);
  add_common(yama, opts);

  // poscnf
  std::string poscnf_path;
  CLI::App* poscnf = app.add_subcommand("poscnf", "Winner of the variable-selection game on a positive CNF");
  poscnf->add_option("cnf", poscnf_path, "Positive CNF file")->required();
  add_common(poscnf, opts);

  // reduce
  std::string reduce_path, reduce_out;
  CLI::App* reduce = app.add_subcommand("reduce", "Build the reduction graph for a positive CNF");
  reduce->add_option("cnf", reduce_path, "Positive CNF file")->required();
  reduce->add_option("-o,--output", reduce_out, "Write the annotated graph file here (default: stdout)");
  add_common(reduce, opts);

  // check-reduction
  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check-reduction", "Audit the reduction, verify move parity and compare winners");
  check->add_option("cnf", check_path, "Positive CNF file")->required();
  add_common(check, opts);

  // verify
  std::string verify_suite;
  std::vector<std::int64_t> verify_bounds;
  std::uint64_t verify_seed = dyn::VerifyOptions{}.seed;
  std::string suites_help;
  for (const std::string& id : dyn::suite_ids()) {
    if (!suites_help.empty()) suites_help += ", ";
    suites_help += id;
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a theorem-verification suite");
  verify->add_option("suite", verify_suite, "One of: " + suites_help)->required();
  verify->add_option("bounds", verify_bounds, "Optional positional bounds for the suite");
  verify->add_option("--seed", verify_seed, "Seed for randomized suites")->capture_default_str();
  add_common(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (sg->parsed()) return cmd_sg(sg_graph, sg_tokens, opts);
    if (outc->parsed()) return cmd_outcome(outcome_graph, outcome_tokens, outcome_move, opts);
    if (classify->parsed()) return cmd_classify(classify_graph, classify_tokens, classify_verify, opts);
    if (yama->parsed()) return cmd_yama(yama_args, opts);
    if (poscnf->parsed()) return cmd_poscnf(poscnf_path, opts);
    if (reduce->parsed()) return cmd_reduce(reduce_path, reduce_out, opts);
    if (check->parsed()) return cmd_check_reduction(check_path, opts);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_bounds, verify_seed, opts);
  } catch (const dyn::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const dyn::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const dyn::FileFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitInput;
}

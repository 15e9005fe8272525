#include "dyn/reduction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace dyn {

Subgraph subgraph_of(const VertexRole& role) {
  switch (role.kind) {
    case VertexRole::Kind::X:
    case VertexRole::Kind::Q:
    case VertexRole::Kind::Parity:
      return Subgraph::G1;
    case VertexRole::Kind::C:
    case VertexRole::Kind::CPath:
    case VertexRole::Kind::F:
      return Subgraph::G2;
    case VertexRole::Kind::W:
    case VertexRole::Kind::WPath:
      return Subgraph::G3;
  }
  return Subgraph::G3;
}

std::string role_to_string(const VertexRole& role) {
  std::ostringstream os;
  switch (role.kind) {
    case VertexRole::Kind::X: os << "x(" << role.index << ')'; break;
    case VertexRole::Kind::Q: os << "q(" << role.index << ',' << role.step << ')'; break;
    case VertexRole::Kind::Parity: os << "parity"; break;
    case VertexRole::Kind::C: os << "c(" << role.index << ')'; break;
    case VertexRole::Kind::CPath:
      os << "cpath(" << role.index << ',' << role.path << ',' << role.step << ')';
      break;
    case VertexRole::Kind::F: os << "f(" << role.index << ')'; break;
    case VertexRole::Kind::W: os << "w"; break;
    case VertexRole::Kind::WPath: os << "wpath(" << role.path << ',' << role.step << ')'; break;
  }
  return os.str();
}

std::optional<VertexRole> role_from_string(const std::string& text) {
  if (text == "parity") return VertexRole{VertexRole::Kind::Parity, 0, 0, 0};
  if (text == "w") return VertexRole{VertexRole::Kind::W, 0, 0, 0};

  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return std::nullopt;
  const std::string name = text.substr(0, open);
  const std::string args = text.substr(open + 1, text.size() - open - 2);

  std::vector<int> nums;
  std::istringstream is(args);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(piece, &used);
      if (used != piece.size()) return std::nullopt;
      nums.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  if (name == "x" && nums.size() == 1) return VertexRole{VertexRole::Kind::X, nums[0], 0, 0};
  if (name == "q" && nums.size() == 2) return VertexRole{VertexRole::Kind::Q, nums[0], 0, nums[1]};
  if (name == "c" && nums.size() == 1) return VertexRole{VertexRole::Kind::C, nums[0], 0, 0};
  if (name == "cpath" && nums.size() == 3) {
    return VertexRole{VertexRole::Kind::CPath, nums[0], nums[1], nums[2]};
  }
  if (name == "f" && nums.size() == 1) return VertexRole{VertexRole::Kind::F, nums[0], 0, 0};
  if (name == "wpath" && nums.size() == 2) {
    return VertexRole{VertexRole::Kind::WPath, 0, nums[0], nums[1]};
  }
  return std::nullopt;
}

ReductionGraph build_reduction(const PosCnf& f) {
  const int n = f.n;
  const int m = static_cast<int>(f.clauses.size());
  if (n < 1 || m < 1) throw std::invalid_argument("formula needs at least one variable and clause");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    for (int v : clause) {
      if (v < 1 || v > n) throw std::invalid_argument("clause variable out of range");
    }
  }

  ReductionGraph rg;
  Digraph& g = rg.graph;
  auto add = [&](const std::string& label, VertexRole role) {
    const int idx = g.add_vertex(label);
    rg.roles.push_back(role);
    return idx;
  };

  std::vector<int> x(static_cast<std::size_t>(n));
  std::vector<std::array<int, 3>> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    x[static_cast<std::size_t>(i - 1)] = add("x" + std::to_string(i), {VertexRole::Kind::X, i, 0, 0});
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= 3; ++k) {
      q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] =
          add("q" + std::to_string(i) + "_" + std::to_string(k), {VertexRole::Kind::Q, i, 0, k});
    }
  }
  const int parity = n % 2 == 1 ? add("parity", {VertexRole::Kind::Parity, 0, 0, 0}) : -1;

  std::vector<int> c(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    c[static_cast<std::size_t>(j - 1)] = add("c" + std::to_string(j), {VertexRole::Kind::C, j, 0, 0});
  }
  std::vector<std::vector<std::array<int, 2>>> cpaths(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    const int path_count = static_cast<int>(f.clauses[static_cast<std::size_t>(j - 1)].size()) - 1;
    for (int l = 1; l <= path_count; ++l) {
      std::array<int, 2> pair{};
      for (int k = 1; k <= 2; ++k) {
        pair[static_cast<std::size_t>(k - 1)] =
            add("cp" + std::to_string(j) + "_" + std::to_string(l) + "_" + std::to_string(k),
                {VertexRole::Kind::CPath, j, l, k});
      }
      cpaths[static_cast<std::size_t>(j - 1)].push_back(pair);
    }
  }
  std::vector<int> fj(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    fj[static_cast<std::size_t>(j - 1)] = add("f" + std::to_string(j), {VertexRole::Kind::F, j, 0, 0});
  }
  const int w = add("w", {VertexRole::Kind::W, 0, 0, 0});
  std::vector<std::array<int, 2>> wpaths;
  for (int l = 1; l <= m - 1; ++l) {
    std::array<int, 2> pair{};
    for (int k = 1; k <= 2; ++k) {
      pair[static_cast<std::size_t>(k - 1)] =
          add("wp" + std::to_string(l) + "_" + std::to_string(k), {VertexRole::Kind::WPath, 0, l, k});
    }
    wpaths.push_back(pair);
  }

  // Edges, source-major in canonical order.
  for (int i = 1; i <= n; ++i) {
    g.add_edge(x[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(i - 1)][0]);
    for (int j = 1; j <= m; ++j) {
      const auto& clause = f.clauses[static_cast<std::size_t>(j - 1)];
      if (std::find(clause.begin(), clause.end(), i) != clause.end()) {
        g.add_edge(x[static_cast<std::size_t>(i - 1)], c[static_cast<std::size_t>(j - 1)]);
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    const auto& qi = q[static_cast<std::size_t>(i - 1)];
    g.add_edge(qi[0], qi[1]);
    g.add_edge(qi[1], qi[2]);
  }
  if (parity >= 0) g.add_edge(q[0][2], parity);
  for (int j = 1; j <= m; ++j) {
    for (const auto& pair : cpaths[static_cast<std::size_t>(j - 1)]) {
      g.add_edge(c[static_cast<std::size_t>(j - 1)], pair[0]);
    }
    g.add_edge(c[static_cast<std::size_t>(j - 1)], fj[static_cast<std::size_t>(j - 1)]);
    g.add_edge(c[static_cast<std::size_t>(j - 1)], w);
    for (const auto& pair : cpaths[static_cast<std::size_t>(j - 1)]) {
      g.add_edge(pair[0], pair[1]);
    }
  }
  for (const auto& pair : wpaths) g.add_edge(w, pair[0]);
  for (const auto& pair : wpaths) g.add_edge(pair[0], pair[1]);

  rg.init.assign(g.vertex_count(), 0);
  for (int i = 1; i <= n; ++i) {
    const int xi = x[static_cast<std::size_t>(i - 1)];
    rg.init[static_cast<std::size_t>(xi)] = 2 * (g.out_degree(xi) + 1);
  }
  for (int j = 1; j <= m; ++j) rg.init[static_cast<std::size_t>(c[static_cast<std::size_t>(j - 1)])] = 1;
  if (parity >= 0) rg.init[static_cast<std::size_t>(parity)] = 1;
  return rg;
}

namespace {

struct RoleIndex {
  std::map<int, int> x, c, f;                      // 1-based id -> vertex
  std::map<std::pair<int, int>, int> q;            // (i, k) -> vertex
  std::map<std::tuple<int, int, int>, int> cpath;  // (j, l, k) -> vertex
  std::map<std::pair<int, int>, int> wpath;        // (l, k) -> vertex
  std::vector<int> parities, ws;
  bool broken = false;
};

RoleIndex index_roles(const ReductionGraph& rg, AuditReport& rep) {
  RoleIndex ri;
  auto dup = [&](const std::string& what) {
    rep.failures.push_back("duplicate role " + what);
    ri.broken = true;
  };
  for (std::size_t v = 0; v < rg.roles.size(); ++v) {
    const VertexRole& role = rg.roles[v];
    const int vi = static_cast<int>(v);
    switch (role.kind) {
      case VertexRole::Kind::X:
        if (!ri.x.emplace(role.index, vi).second) dup(role_to_string(role));
        break;
      case VertexRole::Kind::Q:
        if (!ri.q.emplace(std::make_pair(role.index, role.step), vi).second) dup(role_to_string(role));
        break;
      case VertexRole::Kind::Parity: ri.parities.push_back(vi); break;
      case VertexRole::Kind::C:
        if (!ri.c.emplace(role.index, vi).second) dup(role_to_string(role));
        break;
      case VertexRole::Kind::CPath:
        if (!ri.cpath.emplace(std::make_tuple(role.index, role.path, role.step), vi).second) {
          dup(role_to_string(role));
        }
        break;
      case VertexRole::Kind::F:
        if (!ri.f.emplace(role.index, vi).second) dup(role_to_string(role));
        break;
      case VertexRole::Kind::W: ri.ws.push_back(vi); break;
      case VertexRole::Kind::WPath:
        if (!ri.wpath.emplace(std::make_pair(role.path, role.step), vi).second) dup(role_to_string(role));
        break;
    }
  }
  return ri;
}

std::string vertex_set_to_string(const Digraph& g, const std::set<int>& vs) {
  std::string out = "{";
  for (int v : vs) {
    if (out.size() > 1) out += ",";
    out += g.label(v);
  }
  return out + "}";
}

}  // namespace

AuditReport audit_reduction(const ReductionGraph& rg) {
  AuditReport rep;
  const Digraph& g = rg.graph;
  const std::size_t vc = g.vertex_count();
  auto check = [&](bool ok, const std::string& message) {
    ++rep.checks_run;
    if (!ok) rep.failures.push_back(message);
  };

  check(rg.roles.size() == vc, "role annotation count differs from vertex count");
  check(rg.init.size() == vc, "token vector length differs from vertex count");
  if (rg.roles.size() != vc || rg.init.size() != vc) return rep;

  for (const std::string& issue : validate_graph(g).issues) {
    rep.failures.push_back("graph: " + issue);
  }
  ++rep.checks_run;

  RoleIndex ri = index_roles(rg, rep);

  // Coverage: x spans 1..n, q spans (1..n)x(1..3), clause roles span 1..m,
  // path roles are checked against recovered clause sizes below.
  const int n = static_cast<int>(ri.x.size());
  const int m = static_cast<int>(ri.c.size());
  check(n >= 1, "no variable vertices");
  check(m >= 1, "no clause vertices");
  for (int i = 1; i <= n; ++i) {
    if (!ri.x.contains(i)) { check(false, "missing role x(" + std::to_string(i) + ")"); ri.broken = true; }
    for (int k = 1; k <= 3; ++k) {
      if (!ri.q.contains({i, k})) {
        check(false, "missing role q(" + std::to_string(i) + "," + std::to_string(k) + ")");
        ri.broken = true;
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (!ri.c.contains(j)) { check(false, "missing role c(" + std::to_string(j) + ")"); ri.broken = true; }
    if (!ri.f.contains(j)) { check(false, "missing role f(" + std::to_string(j) + ")"); ri.broken = true; }
  }
  // Group sizes pin down strays whose indices sit outside the covered ranges.
  check(ri.q.size() == static_cast<std::size_t>(3 * n), "stray variable-path vertices");
  if (ri.q.size() != static_cast<std::size_t>(3 * n)) ri.broken = true;
  check(ri.f.size() == static_cast<std::size_t>(m), "stray f vertices");
  if (ri.f.size() != static_cast<std::size_t>(m)) ri.broken = true;
  check(ri.ws.size() == 1, "expected exactly one collector vertex w, found " + std::to_string(ri.ws.size()));
  if (ri.ws.size() != 1) ri.broken = true;
  check(ri.parities.size() == (n % 2 == 1 ? 1u : 0u),
        n % 2 == 1 ? "parity vertex missing (odd variable count)"
                   : "unexpected parity vertex (even variable count)");
  if (ri.parities.size() > 1) ri.broken = true;
  if (ri.broken || n < 1 || m < 1) return rep;

  const int w = ri.ws.front();

  // Clause membership recovered from x -> c edges.
  std::vector<std::set<int>> members(static_cast<std::size_t>(m + 1));
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (g.has_edge(ri.x.at(i), ri.c.at(j))) members[static_cast<std::size_t>(j)].insert(i);
    }
    check(!members[static_cast<std::size_t>(j)].empty(),
          "clause vertex c(" + std::to_string(j) + ") has no incoming variable edges");
  }

  // Local out-neighbor sets, role by role.
  auto out_set = [&](int v) {
    const auto& adj = g.out_neighbors(v);
    return std::set<int>(adj.begin(), adj.end());
  };
  auto check_out = [&](int v, const std::set<int>& expect, const std::string& who) {
    check(out_set(v) == expect, who + " out-neighbors are " + vertex_set_to_string(g, out_set(v)) +
                                    ", expected " + vertex_set_to_string(g, expect));
  };

  for (int i = 1; i <= n; ++i) {
    std::set<int> expect{ri.q.at({i, 1})};
    for (int j = 1; j <= m; ++j) {
      if (members[static_cast<std::size_t>(j)].contains(i)) expect.insert(ri.c.at(j));
    }
    check_out(ri.x.at(i), expect, "x(" + std::to_string(i) + ")");
    check_out(ri.q.at({i, 1}), {ri.q.at({i, 2})}, "q(" + std::to_string(i) + ",1)");
    check_out(ri.q.at({i, 2}), {ri.q.at({i, 3})}, "q(" + std::to_string(i) + ",2)");
    std::set<int> tail;
    if (i == 1 && n % 2 == 1) tail.insert(ri.parities.front());
    check_out(ri.q.at({i, 3}), tail, "q(" + std::to_string(i) + ",3)");
  }
  if (n % 2 == 1) check_out(ri.parities.front(), {}, "parity");

  for (int j = 1; j <= m; ++j) {
    const int size_j = static_cast<int>(members[static_cast<std::size_t>(j)].size());
    std::set<int> expect{ri.f.at(j), w};
    for (int l = 1; l <= size_j - 1; ++l) {
      const auto it = ri.cpath.find({j, l, 1});
      if (it == ri.cpath.end()) {
        check(false, "missing role cpath(" + std::to_string(j) + "," + std::to_string(l) + ",1)");
        continue;
      }
      expect.insert(it->second);
    }
    check_out(ri.c.at(j), expect, "c(" + std::to_string(j) + ")");
    check(g.out_degree(ri.c.at(j)) == size_j + 1,
          "d_out(c(" + std::to_string(j) + ")) = " + std::to_string(g.out_degree(ri.c.at(j))) +
              ", expected |C| + 1 = " + std::to_string(size_j + 1));
    check_out(ri.f.at(j), {}, "f(" + std::to_string(j) + ")");
    for (int l = 1; l <= size_j - 1; ++l) {
      if (!ri.cpath.contains({j, l, 1}) || !ri.cpath.contains({j, l, 2})) {
        check(ri.cpath.contains({j, l, 2}),
              "missing role cpath(" + std::to_string(j) + "," + std::to_string(l) + ",2)");
        continue;
      }
      check_out(ri.cpath.at({j, l, 1}), {ri.cpath.at({j, l, 2})},
                "cpath(" + std::to_string(j) + "," + std::to_string(l) + ",1)");
      check_out(ri.cpath.at({j, l, 2}), {},
                "cpath(" + std::to_string(j) + "," + std::to_string(l) + ",2)");
    }
  }
  check(static_cast<int>(ri.cpath.size()) ==
            2 * std::accumulate(members.begin() + 1, members.end(), 0,
                                [](int acc, const std::set<int>& s) {
                                  return acc + static_cast<int>(s.size()) - 1;
                                }),
        "stray clause-path vertices");

  std::set<int> w_expect;
  for (int l = 1; l <= m - 1; ++l) {
    const auto it = ri.wpath.find({l, 1});
    if (it == ri.wpath.end()) {
      check(false, "missing role wpath(" + std::to_string(l) + ",1)");
      continue;
    }
    w_expect.insert(it->second);
  }
  check_out(w, w_expect, "w");
  check(g.out_degree(w) == m - 1, "d_out(w) = " + std::to_string(g.out_degree(w)) +
                                      ", expected m - 1 = " + std::to_string(m - 1));
  for (int l = 1; l <= m - 1; ++l) {
    if (!ri.wpath.contains({l, 1}) || !ri.wpath.contains({l, 2})) {
      check(ri.wpath.contains({l, 2}), "missing role wpath(" + std::to_string(l) + ",2)");
      continue;
    }
    check_out(ri.wpath.at({l, 1}), {ri.wpath.at({l, 2})}, "wpath(" + std::to_string(l) + ",1)");
    check_out(ri.wpath.at({l, 2}), {}, "wpath(" + std::to_string(l) + ",2)");
  }
  check(static_cast<int>(ri.wpath.size()) == 2 * (m - 1), "stray collector-path vertices");

  // Token placement.
  for (std::size_t v = 0; v < vc; ++v) {
    const VertexRole& role = rg.roles[v];
    const TokenCount tokens = rg.init[v];
    TokenCount expect = 0;
    if (role.kind == VertexRole::Kind::X) expect = 2 * (g.out_degree(static_cast<int>(v)) + 1);
    if (role.kind == VertexRole::Kind::C || role.kind == VertexRole::Kind::Parity) expect = 1;
    check(tokens == expect, "vertex " + g.label(static_cast<int>(v)) + " starts with " +
                                std::to_string(tokens) + " tokens, expected " + std::to_string(expect));
  }

  // Acyclicity (Kahn).
  {
    std::vector<int> indeg(vc, 0);
    for (std::size_t v = 0; v < vc; ++v) {
      for (int u : g.out_neighbors(static_cast<int>(v))) indeg[static_cast<std::size_t>(u)] += 1;
    }
    std::vector<int> stack;
    for (std::size_t v = 0; v < vc; ++v) {
      if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int u : g.out_neighbors(v)) {
        if (--indeg[static_cast<std::size_t>(u)] == 0) stack.push_back(u);
      }
    }
    check(seen == vc, "graph contains a directed cycle");
  }

  // The construction's explicit two-class assignment: class A holds x(i),
  // q(i,2), the parity vertex, f(j), the first vertex of every clause path,
  // the last vertex of every collector path, and w.
  {
    std::vector<bool> in_a(vc, false);
    for (std::size_t v = 0; v < vc; ++v) {
      const VertexRole& role = rg.roles[v];
      const bool a = role.kind == VertexRole::Kind::X ||
                     (role.kind == VertexRole::Kind::Q && role.step == 2) ||
                     role.kind == VertexRole::Kind::Parity || role.kind == VertexRole::Kind::F ||
                     (role.kind == VertexRole::Kind::CPath && role.step == 1) ||
                     (role.kind == VertexRole::Kind::WPath && role.step == 2) ||
                     role.kind == VertexRole::Kind::W;
      in_a[v] = a;
    }
    bool partition_ok = true;
    for (std::size_t v = 0; v < vc && partition_ok; ++v) {
      for (int u : g.out_neighbors(static_cast<int>(v))) {
        if (in_a[v] == in_a[static_cast<std::size_t>(u)]) {
          rep.failures.push_back("edge (" + g.label(static_cast<int>(v)) + "," + g.label(u) +
                                 ") stays inside class " + (in_a[v] ? "A" : "B"));
          partition_ok = false;
          break;
        }
      }
    }
    ++rep.checks_run;

    // Generic 2-colorability of the underlying undirected graph.
    std::vector<int> color(vc, -1);
    bool bipartite = true;
    std::vector<std::vector<int>> und(vc);
    for (std::size_t v = 0; v < vc; ++v) {
      for (int u : g.out_neighbors(static_cast<int>(v))) {
        und[v].push_back(u);
        und[static_cast<std::size_t>(u)].push_back(static_cast<int>(v));
      }
    }
    for (std::size_t s = 0; s < vc && bipartite; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::queue<int> bfs;
      bfs.push(static_cast<int>(s));
      while (!bfs.empty() && bipartite) {
        const int v = bfs.front();
        bfs.pop();
        for (int u : und[static_cast<std::size_t>(v)]) {
          if (color[static_cast<std::size_t>(u)] == -1) {
            color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
            bfs.push(u);
          } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
            bipartite = false;
          }
        }
      }
    }
    check(bipartite, "underlying graph is not 2-colorable");
  }

  return rep;
}

ClaimParityResult verify_claim_even_moves(const ReductionGraph& rg, const SolveLimits& limits) {
  ClaimParityResult res;
  const Digraph& g = rg.graph;
  const std::size_t vc = g.vertex_count();
  if (rg.roles.size() != vc || rg.init.size() != vc) {
    throw std::invalid_argument("reduction graph annotations are inconsistent");
  }

  // Positions are extended with three bookkeeping coordinates: the parity of
  // moves made in G1, in G2, and the set of clause vertices already played.
  std::vector<int> c_bit(vc, -1);
  int c_count = 0;
  for (std::size_t v = 0; v < vc; ++v) {
    if (rg.roles[v].kind == VertexRole::Kind::C) c_bit[v] = c_count++;
  }
  if (c_count > 62) throw ResourceLimitError(limits.max_states, "too many clause vertices to track");

  struct Frame {
    Position state;  // plain tokens + [g1 parity, g2 parity, played mask]
    std::vector<std::pair<Move, Position>> moves;
    std::size_t next = 0;
    Move incoming;
  };

  auto make_key = [&](const Position& plain, TokenCount g1, TokenCount g2, TokenCount mask) {
    Position key = plain;
    key.push_back(g1);
    key.push_back(g2);
    key.push_back(mask);
    return key;
  };
  auto plain_of = [&](const Position& key) { return Position(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(vc)); };

  std::unordered_set<Position, PositionHash> visited;
  std::vector<Frame> stack;

  const Position root = make_key(rg.init, 0, 0, 0);
  visited.insert(root);
  stack.push_back({root, dyn_moves(g, rg.init), 0, Move{-1, 0}});

  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.next == 0 && frame.moves.empty()) {
      // Terminal: both per-subgraph move counts must be even.
      const TokenCount g1 = frame.state[vc];
      const TokenCount g2 = frame.state[vc + 1];
      if ((g1 % 2 != 0 || g2 % 2 != 0) && res.holds) {
        res.holds = false;
        for (const Frame& f : stack) {
          if (f.incoming.vertex >= 0) res.witness.push_back(f.incoming);
        }
      }
    }
    if (frame.next >= frame.moves.size()) {
      stack.pop_back();
      continue;
    }
    const auto& [move, succ] = frame.moves[frame.next++];
    const VertexRole& role = rg.roles[static_cast<std::size_t>(move.vertex)];

    if ((role.kind == VertexRole::Kind::Q && role.step >= 2) ||
        role.kind == VertexRole::Kind::CPath || role.kind == VertexRole::Kind::WPath) {
      res.dead_roles_silent = false;
    }
    TokenCount mask = frame.state[vc + 2];
    if (role.kind == VertexRole::Kind::C) {
      const TokenCount bit = TokenCount{1} << c_bit[static_cast<std::size_t>(move.vertex)];
      if (mask & bit) res.c_played_once = false;
      mask |= bit;
    }
    const Subgraph part = subgraph_of(role);
    const TokenCount g1 = frame.state[vc] ^ (part == Subgraph::G1 ? 1 : 0);
    const TokenCount g2 = frame.state[vc + 1] ^ (part == Subgraph::G2 ? 1 : 0);

    Position key = make_key(succ, g1, g2, mask);
    if (visited.contains(key)) continue;
    if (visited.size() >= limits.max_states) throw ResourceLimitError(limits.max_states);
    visited.insert(key);
    Frame child;
    child.moves = dyn_moves(g, plain_of(key));
    child.incoming = move;
    child.state = std::move(key);
    stack.push_back(std::move(child));
  }

  res.states_explored = visited.size();
  return res;
}

EquivalenceReport check_equivalence(const PosCnf& f, const SolveLimits& limits) {
  EquivalenceReport rep;
  rep.formula_winner = poscnf_winner(f);
  const ReductionGraph rg = build_reduction(f);
  const DynRules rules(rg.graph);
  rep.dyn_outcome = outcome(rules, rg.init, limits);
  rep.agree = (rep.formula_winner == CnfWinner::P1) == (rep.dyn_outcome == Outcome::N);
  return rep;
}

}  // namespace dyn

#include <doctest.h>

#include <random>

#include "dyn/io.hpp"

using namespace dyn;

namespace {

const char* kTwoCycle = R"({
  "vertices": ["a", "b"],
  "edges": [["a", "b"], ["b", "a"]],
  "tokens": {"a": 5, "b": 2}
})";

}  // namespace

TEST_CASE("read_graph_file_from_string parses the documented schema") {
  const GraphFile gf = read_graph_file_from_string(kTwoCycle);
  REQUIRE(gf.graph.vertex_count() == 2);
  CHECK(gf.graph.label(0) == "a");
  CHECK(gf.graph.label(1) == "b");
  CHECK(gf.graph.has_edge(0, 1));
  CHECK(gf.graph.has_edge(1, 0));
  CHECK(gf.tokens == Position{5, 2});
  CHECK_FALSE(gf.roles.has_value());
}

TEST_CASE("zero-token vertices may be omitted") {
  const GraphFile gf = read_graph_file_from_string(
      R"({"vertices": ["a", "b"], "edges": [], "tokens": {"b": 3}})");
  CHECK(gf.tokens == Position{0, 3});
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(read_graph_file_from_string("not json"), FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string("[]"), FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(R"({"vertices": ["a"]})"), FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(
                      R"({"vertices": ["a", "a"], "edges": [], "tokens": {}})"),
                  FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(
                      R"({"vertices": ["a"], "edges": [["a", "z"]], "tokens": {}})"),
                  FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(
                      R"({"vertices": ["a"], "edges": [], "tokens": {"a": -1}})"),
                  FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(
                      R"({"vertices": ["a"], "edges": [], "tokens": {}, "extras": 1})"),
                  FileFormatError);
  CHECK_THROWS_AS(read_graph_file_from_string(
                      R"({"vertices": ["a"], "edges": [], "tokens": {}, "roles": {}})"),
                  FileFormatError);  // roles present but incomplete
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(41);
  std::bernoulli_distribution edge(0.4);
  std::uniform_int_distribution<TokenCount> tok(0, 9);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 5);
    GraphFile gf;
    gf.graph = Digraph(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && edge(rng)) gf.graph.add_edge(a, b);
      }
    }
    gf.tokens.resize(static_cast<std::size_t>(n));
    for (auto& t : gf.tokens) t = tok(rng);

    const std::string text = write_graph_file(gf);
    const GraphFile back = read_graph_file_from_string(text);
    REQUIRE(back.graph.vertex_count() == gf.graph.vertex_count());
    CHECK(back.tokens == gf.tokens);
    for (int v = 0; v < n; ++v) {
      CHECK(back.graph.label(v) == gf.graph.label(v));
      CHECK(back.graph.out_neighbors(v) == gf.graph.out_neighbors(v));
    }
    // Serialization is canonical: a second round trip is byte-identical.
    CHECK(write_graph_file(back) == text);
  }
}

TEST_CASE("role annotations survive the round trip") {
  PosCnf f;
  f.n = 2;
  f.clauses = {{1, 2}};
  const ReductionGraph rg = build_reduction(f);
  const GraphFile gf{rg.graph, rg.init, rg.roles};

  const GraphFile back = read_graph_file_from_string(write_graph_file(gf));
  REQUIRE(back.roles.has_value());
  CHECK(*back.roles == rg.roles);
  CHECK(back.tokens == rg.init);

  // The reloaded file audits cleanly.
  const ReductionGraph reloaded{back.graph, back.tokens, *back.roles};
  CHECK(audit_reduction(reloaded).ok());
}

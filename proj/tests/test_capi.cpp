#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "cutkit/cutkit.h"

using nlohmann::json;

namespace {

json take(char* p) {
  json j = json::parse(p);
  cutkit_string_free(p);
  return j;
}

}  // namespace

TEST_CASE("parse, solve, free") {
  cutkit_graph* g = nullptr;
  REQUIRE(cutkit_graph_parse("p digraph 2 2\na 1 2 1\na 2 1 1\n", &g) == CUTKIT_OK);
  CHECK(cutkit_graph_node_count(g) == 2);
  CHECK(cutkit_graph_is_directed(g) == 1);
  char* rep = nullptr;
  REQUIRE(cutkit_solve(g, "bicut", "{\"variant\":\"global\"}", &rep) == CUTKIT_OK);
  json j = take(rep);
  CHECK(j["value"] == 2);
  CHECK(j["certificate"]["status"] == "valid");
  cutkit_graph_free(g);
}

TEST_CASE("error codes") {
  cutkit_graph* g = nullptr;
  CHECK(cutkit_graph_parse("p digraph 2 1\na 1 1 1\n", &g) == CUTKIT_PARSE_ERROR);
  CHECK(std::strlen(cutkit_last_error()) > 0);
  CHECK(g == nullptr);
  CHECK(cutkit_graph_parse(nullptr, &g) == CUTKIT_INVALID_INPUT);
  CHECK(cutkit_graph_load("/nonexistent/file", &g) == CUTKIT_INVALID_INPUT);

  REQUIRE(cutkit_graph_parse("p digraph 3 6\na 1 2 1\na 2 1 1\na 2 3 1\na 3 2 1\na 1 3 1\na 3 1 1\n", &g) ==
          CUTKIT_OK);
  char* rep = nullptr;
  CHECK(cutkit_solve(g, "bicut", "{\"variant\":\"node\"}", &rep) == CUTKIT_INFEASIBLE);
  CHECK(rep == nullptr);
  CHECK(cutkit_solve(g, "nonsense", nullptr, &rep) == CUTKIT_INVALID_INPUT);
  CHECK(cutkit_solve(g, "bicut", "not json", &rep) == CUTKIT_INVALID_INPUT);
  CHECK(cutkit_oracle(g, "edge-bicut", "{\"max_nodes\":2}", &rep) == CUTKIT_BUDGET_EXCEEDED);
  cutkit_graph_free(g);
  cutkit_graph_free(nullptr);
}

TEST_CASE("generate, reduce, emit") {
  cutkit_graph* g = nullptr;
  REQUIRE(cutkit_generate("partite", "{\"n\":6,\"k\":3,\"seed\":4}", &g) == CUTKIT_OK);
  char* text = nullptr;
  REQUIRE(cutkit_graph_emit(g, 1, &text) == CUTKIT_OK);
  json j = take(text);
  CHECK(j["parts"].size() == 6);
  cutkit_graph* h = nullptr;
  REQUIRE(cutkit_reduce(g, "3cut", nullptr, &h) == CUTKIT_OK);
  CHECK(cutkit_graph_node_count(h) == 9);
  char* rep = nullptr;
  REQUIRE(cutkit_verify(g, "gadget", "{\"kind\":\"s-star\"}", &rep) == CUTKIT_OK);
  CHECK(take(rep)["ok"] == true);
  cutkit_graph_free(h);
  cutkit_graph_free(g);
}

TEST_CASE("verify and experiment without a graph") {
  char* rep = nullptr;
  REQUIRE(cutkit_verify(nullptr, "skeleton", nullptr, &rep) == CUTKIT_OK);
  CHECK(take(rep)["ok"] == true);
  REQUIRE(cutkit_verify(nullptr, "dab", "{\"a\":3,\"b\":9}", &rep) == CUTKIT_OK);
  CHECK(take(rep)["uniform_lp_feasible"] == true);
  CHECK(cutkit_verify(nullptr, "gadget", nullptr, &rep) == CUTKIT_INVALID_INPUT);
  char* csv = nullptr;
  REQUIRE(cutkit_experiment("gap", nullptr, &csv) == CUTKIT_OK);
  CHECK(std::string(csv).rfind("a,b,r", 0) == 0);
  cutkit_string_free(csv);
  CHECK(std::string(cutkit_version()).size() > 0);
}

TEST_CASE("reports are reproducible apart from wall time") {
  cutkit_graph* g = nullptr;
  REQUIRE(cutkit_generate("graph", "{\"n\":8,\"seed\":9}", &g) == CUTKIT_OK);
  char *a = nullptr, *b = nullptr;
  REQUIRE(cutkit_solve(g, "sep-kcut", "{\"k\":3,\"mode\":\"monte-carlo\",\"threads\":3}", &a) == CUTKIT_OK);
  REQUIRE(cutkit_solve(g, "sep-kcut", "{\"k\":3,\"mode\":\"monte-carlo\",\"threads\":1}", &b) == CUTKIT_OK);
  json ja = take(a), jb = take(b);
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  CHECK(ja == jb);
  cutkit_graph_free(g);
}

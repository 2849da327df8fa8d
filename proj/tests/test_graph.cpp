#include <doctest.h>

#include "cutkit/error.hpp"
#include "cutkit/gadgets.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/io.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("in_cut basics") {
  auto g = dg(2, {{0, 1, 5}});
  auto c = in_cut(g, ns(2, {1}));
  CHECK(c.arcs.size() == 1);
  CHECK(c.weight == 5);
  CHECK(in_cut(g, NodeSet(2)).weight == 0);
  CHECK(in_cut(g, NodeSet::full(2)).weight == 0);

  auto tri = dg(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 1}, {2, 0, 1}});
  auto t = in_cut(tri, ns(3, {0}));
  CHECK(t.arcs.size() == 2);
  CHECK(t.weight == 2);
}

TEST_CASE("in-degree equals out-degree of complement") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_digraph(6, 0.5, 3, seed);
    for (std::uint64_t m = 0; m < 64; ++m) {
      auto x = NodeSet::from_mask(6, m);
      CHECK(in_degree(g, x) == out_degree(g, x.complement()));
    }
  }
}

TEST_CASE("beta_sigma") {
  auto c2 = dg(2, {{0, 1, 1}, {1, 0, 1}});
  auto p = beta_sigma(c2, ns(2, {0}), ns(2, {1}));
  CHECK(p.beta == 2);
  CHECK(p.sigma == 2);
  auto same = beta_sigma(c2, ns(2, {0}), ns(2, {0}));
  CHECK(same.beta == 1);
  CHECK(same.sigma == 2);
  auto empty = beta_sigma(c2, NodeSet(2), NodeSet(2));
  CHECK(empty.beta == 0);
  CHECK(empty.sigma == 0);
}

TEST_CASE("beta is the size of the union of in-cuts") {
  auto g = random_digraph(5, 0.6, 3, 7);
  for (std::uint64_t a = 0; a < 32; ++a)
    for (std::uint64_t b = 0; b < 32; ++b) {
      auto A = NodeSet::from_mask(5, a), B = NodeSet::from_mask(5, b);
      auto p = beta_sigma(g, A, B);
      CHECK(p.beta == arc_set_weight(g, union_in_cut(g, A, B)));
      CHECK(p.beta <= p.sigma);
    }
}

TEST_CASE("reach") {
  auto path = dg(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(reach(path, ns(3, {0})) == NodeSet::full(3));
  CHECK(reach(path, ns(3, {2})) == ns(3, {2}));
  auto c2 = dg(2, {{0, 1, 1}, {1, 0, 1}});
  CHECK(reach(c2, ns(2, {0})) == NodeSet::full(2));
}

TEST_CASE("contract") {
  auto g = dg(3, {{0, 1, 1}, {1, 2, 1}});
  auto c = contract(g, {ns(3, {0, 1})});
  CHECK(c.graph.node_count() == 2);
  REQUIRE(c.graph.arc_count() == 1);
  CHECK(c.graph.arc(0).tail == c.node_map[0]);
  CHECK(c.graph.arc(0).head == c.node_map[2]);

  auto id = contract(g, {});
  CHECK(id.graph.node_count() == 3);
  CHECK(id.graph.arc_count() == 2);

  CHECK_THROWS_AS(contract(g, {ns(3, {0, 1}), ns(3, {1, 2})}), InvalidInput);
}

TEST_CASE("parse and emit") {
  auto any = parse_graph("p digraph 2 1\na 1 2 5\n");
  auto& g = std::get<WeightedDigraph>(any);
  CHECK(g.node_count() == 2);
  REQUIRE(g.arc_count() == 1);
  CHECK(g.arc(0).weight == 5);

  CHECK_THROWS_AS(parse_graph("a 1 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p digraph 2 1\na 1 1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p digraph 2 1\na 1 2 -5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p digraph 2 1\na 1 3 5\n"), ParseError);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AnyGraph d = random_digraph(6, 0.5, 4, seed);
    AnyGraph u = random_graph(6, 0.5, 4, seed);
    for (const AnyGraph& x : {d, u})
      for (Format f : {Format::text, Format::json}) {
        AnyGraph back = parse_graph(emit(x, f));
        CHECK(emit(back, Format::text) == emit(x, Format::text));
      }
  }

  AnyGraph dab = build_dab(2, 4).graph;
  auto j = parse_graph(emit_json(dab));
  CHECK(std::get<WeightedDigraph>(j).node_count() == 10);
  CHECK(canonical(std::get<WeightedDigraph>(j)) == canonical(std::get<WeightedDigraph>(dab)));
}

TEST_CASE("node weights and terminals survive text round trip") {
  auto any = parse_graph("p graph 3 2\nn 2 inf\nt s 1\ne 1 2 1\ne 2 3 1\n");
  auto again = parse_graph(emit_text(any));
  auto& g = std::get<UndirectedGraph>(again);
  CHECK(g.node_weight(1) == kInfinite);
  CHECK(g.terminal("s") == NodeId{0});
}

TEST_CASE("partition value and components") {
  auto p4 = ug(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(partition_value(p4, {0, 0, 1, 1}) == 1);
  CHECK(partition_value(p4, {0, 1, 0, 1}) == 3);
  CHECK(component_count(p4, ns(4, {1})) == 2);
  CHECK(component_count(p4, NodeSet(4)) == 1);
}

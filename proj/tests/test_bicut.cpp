#include <doctest.h>

#include "cutkit/bicut.hpp"
#include "cutkit/certify.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("st edge bicut") {
  auto pair = dg(2, {{0, 1, 1}, {1, 0, 1}});
  CHECK(st_edge_bicut_2approx(pair, 0, 1).cost == 2);
  CHECK(st_edge_bicut_2approx(dg(2, {{0, 1, 1}}), 0, 1).cost == 1);
}

TEST_CASE("node bicut") {
  // u=2 -> s=0, u -> t=1, isolated 3
  auto g = dg(4, {{2, 0, 1}, {2, 1, 1}});
  auto w = node_costs(g);
  auto r = node_bicut_2approx(g, w);
  CHECK(r.cost == oracle_node_bicut(g, w).value);
  CHECK(certify_node_bicut(g, r.removed, r.s, r.t).ok);
  auto k3 = complete_graph(3).bidirected();
  CHECK_THROWS_AS(node_bicut_2approx(k3, node_costs(k3)), Infeasible);
}

TEST_CASE("s-star bicut") {
  auto pair = dg(2, {{0, 1, 1}, {1, 0, 1}});
  CHECK(s_star_edge_bicut_2approx(pair, 0).cost == 2);
  auto star = dg(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  CHECK(s_star_edge_bicut_2approx(star, 0).cost == 1);
  CHECK(oracle_s_star_edge_bicut(star, 0).value == 1);
}

TEST_CASE("min uncomparable pair") {
  auto path = dg(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
  auto p = min_uncomparable_pair(path);
  REQUIRE(p);
  CHECK(p->sigma == 2);
  CHECK(uncomparable(p->a, p->b));
  CHECK(min_uncomparable_pair(dg(2, {{0, 1, 1}, {1, 0, 1}}))->sigma == 2);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_digraph(3 + seed % 4, 0.5, 3, seed);
    auto q = min_uncomparable_pair(g);
    REQUIRE(q);
    CHECK(q->sigma == oracle_min_uncomparable_sigma(g).value);
    CHECK(beta_sigma(g, q->a, q->b).sigma == q->sigma);
  }
}

TEST_CASE("fixed intersection and complement") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed % 3;
    auto g = random_digraph(n, 0.5, 3, seed);
    for (NodeId z = 0; z < 2; ++z) {
      auto Z = ns(n, {z});
      auto a = bicut_fixed_intersection(g, Z);
      CHECK(a.cost == oracle_bicut_fixed_intersection(g, Z).value);
      CHECK((a.pair.a & a.pair.b) == Z);
      auto b = bicut_fixed_complement(g, Z);
      CHECK(b.cost == oracle_bicut_fixed_complement(g, Z).value);
      CHECK((a.pair.a | a.pair.b).size() <= n);
      CHECK(((b.pair.a | b.pair.b).complement()) == Z);
    }
    auto none = bicut_fixed_intersection(g, NodeSet(n));
    CHECK(none.cost == edge_double_cut_exact(g).cost);
  }
  CHECK_THROWS_AS(bicut_fixed_intersection(dg(2, {}), ns(2, {0})), InvalidInput);
}

TEST_CASE("global bicut") {
  auto pair = dg(2, {{0, 1, 1}, {1, 0, 1}});
  CHECK(approximate_global_bicut(pair).cost == 2);
  auto tri = complete_graph(3).bidirected();
  CHECK(approximate_global_bicut(tri).cost == oracle_edge_bicut(tri).value);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = random_digraph(3 + seed % 4, 0.5, 3, seed);
    auto r = approximate_global_bicut(g);
    auto opt = oracle_edge_bicut(g).value;
    CHECK(r.cost >= opt);
    CHECK(r.cost * 448 <= opt * 895);
    CHECK(certify_bicut_pair(g, r.pair.a, r.pair.b, r.removed_arcs).ok);
    CHECK(arc_set_weight(g, r.removed_arcs) == r.cost);
  }
}

TEST_CASE("global bicut is thread-count independent") {
  auto g = random_digraph(7, 0.45, 3, 11);
  GlobalBicutOptions one, four;
  four.threads = 4;
  auto a = approximate_global_bicut(g, one), b = approximate_global_bicut(g, four);
  CHECK(a.cost == b.cost);
  CHECK(a.pair.a == b.pair.a);
  CHECK(a.pair.b == b.pair.b);
  CHECK(a.method == b.method);
}

TEST_CASE("alpha diagnostics") {
  auto g = random_digraph(6, 0.5, 1, 3);
  NodeSet e(6);
  auto z = bicut_alpha_diagnostics(g, e, e, e, e, e);
  for (Weight x : z) CHECK(x == 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto h = random_digraph(8, 0.5, 2, seed);
    auto X = NodeSet::from_mask(8, seed * 37 % 256), Y = NodeSet::from_mask(8, seed * 91 % 256);
    auto Z = NodeSet::from_mask(8, seed * 13 % 256), W = NodeSet::from_mask(8, ~(seed * 13) % 256);
    auto a = bicut_alpha_diagnostics(h, X, Y, Z, Z, W);
    CHECK(a[2] + a[3] <= arcs_between(h, W, Z));
  }
}

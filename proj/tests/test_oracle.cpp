#include <doctest.h>

#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/kcut.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("oracle examples") {
  CHECK(oracle_edge_bicut(dg(2, {{0, 1, 1}, {1, 0, 1}})).value == 2);
  auto star = star_graph(3);
  CHECK(oracle_node_3cut(star, node_costs(star)).value == 1);
  CHECK(oracle_node_3cut(star, node_costs(star)).nodes == ns(4, {0}));
}

TEST_CASE("budget is enforced") {
  OracleBudget b;
  b.max_nodes = 4;
  auto g = random_digraph(6, 0.5, 1, 1);
  CHECK_THROWS_AS(oracle_edge_bicut(g, b), BudgetExceeded);
  OracleBudget s;
  s.max_subsets = 8;
  CHECK_THROWS_AS(raw::edge_bicut(g, s), BudgetExceeded);
}

TEST_CASE("structural and raw oracles agree on small digraphs") {
  auto corpus = all_small_digraphs(3, 6);
  auto four = all_small_digraphs(4, 3);
  corpus.insert(corpus.end(), four.begin(), four.end());
  for (const auto& g : corpus) {
    const NodeId t = static_cast<NodeId>(g.node_count() - 1);
    auto c = node_costs(g);
    CHECK(oracle_edge_double_cut(g).value == raw::edge_double_cut(g).value);
    CHECK(oracle_st_edge_double_cut(g, 0, t).value == raw::st_edge_double_cut(g, 0, t).value);
    CHECK(oracle_node_double_cut(g, c).value == raw::node_double_cut(g, c).value);
    CHECK(oracle_st_node_double_cut(g, 0, t, c).value == raw::st_node_double_cut(g, 0, t, c).value);
    CHECK(oracle_edge_bicut(g).value == raw::edge_bicut(g).value);
    CHECK(oracle_st_edge_bicut(g, 0, t).value == raw::st_edge_bicut(g, 0, t).value);
    CHECK(oracle_node_bicut(g, c).value == raw::node_bicut(g, c).value);
    CHECK(oracle_s_star_edge_bicut(g, 0).value == raw::s_star_edge_bicut(g, 0).value);
    CHECK(oracle_lin3cut_fixed(g, 0, 1, t).value == raw::lin3cut_fixed(g, 0, 1, t).value);
    CHECK(oracle_lin3cut_star(g, 0, t).value == raw::lin3cut_star(g, 0, t).value);
  }
}

TEST_CASE("undirected oracles agree") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 3 + seed % 4;
    auto g = random_graph(n, 0.5, 2, seed);
    auto c = node_costs(g);
    CHECK(oracle_node_3cut(g, c).value == raw::node_3cut(g, c).value);
    std::vector<NodeId> terms{0, static_cast<NodeId>(n - 1)};
    std::vector<Weight> tc = c;
    for (NodeId x : terms) tc[x] = kInfinite;
    CHECK(oracle_node_multiway(g, terms, tc).value == raw::node_multiway(g, terms, tc).value);
    CHECK(oracle_st_sep_kcut(g, 0, static_cast<NodeId>(n - 1), 3).value ==
          raw::st_sep_kcut(g, 0, static_cast<NodeId>(n - 1), 3).value);
  }
}

TEST_CASE("oracle values are monotone in arc weights") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_digraph(5, 0.5, 3, seed);
    auto heavier = g.reweighted([](ArcId, const Arc& a) { return a.weight + 1; });
    CHECK(oracle_edge_bicut(g).value <= oracle_edge_bicut(heavier).value);
    CHECK(oracle_lin3cut_star(g, 0, 4).value <= oracle_lin3cut_star(heavier, 0, 4).value);
    CHECK(oracle_edge_double_cut(g).value <= oracle_edge_double_cut(heavier).value);
  }
}

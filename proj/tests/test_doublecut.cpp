#include <doctest.h>

#include "cutkit/certify.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/gadgets.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("st edge double cut small cases") {
  auto pair = dg(2, {{0, 1, 1}, {1, 0, 1}});
  auto s = st_edge_double_cut_exact(pair, 0, 1);
  CHECK(s.cost == 2);
  CHECK(s.removed_arcs.size() == 2);
  // u -> s, u -> t
  auto fork = dg(3, {{2, 0, 1}, {2, 1, 1}});
  auto f = st_edge_double_cut_exact(fork, 0, 1);
  CHECK(f.cost == 1);
  CHECK(certify_st_edge_double_cut(fork, f.removed_arcs, 0, 1).ok);
  CHECK(f.S.contains(0));
  CHECK(f.T.contains(1));
  CHECK_FALSE(f.S.intersects(f.T));
}

TEST_CASE("global edge double cut") {
  CHECK(edge_double_cut_exact(dg(2, {})).cost == 0);
  auto k3 = complete_graph(3).bidirected();
  CHECK(edge_double_cut_exact(k3).cost == oracle_edge_double_cut(k3).value);
}

TEST_CASE("edge double cuts equal the oracle") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const std::size_t n = 2 + seed % 6;
    auto g = random_digraph(n, 0.5, 3, seed);
    auto st = st_edge_double_cut_exact(g, 0, static_cast<NodeId>(n - 1));
    CHECK(st.cost == oracle_st_edge_double_cut(g, 0, static_cast<NodeId>(n - 1)).value);
    CHECK(certify_st_edge_double_cut(g, st.removed_arcs, 0, static_cast<NodeId>(n - 1)).ok);
    auto gl = edge_double_cut_exact(g, 2);
    CHECK(gl.cost == oracle_edge_double_cut(g).value);
    CHECK(certify_double_cut(g, gl.removed_arcs, NodeSet(n)).ok);
  }
}

TEST_CASE("path blocking LP on the fork") {
  auto fork = dg(3, {{2, 0, 1}, {2, 1, 1}});
  auto costs = node_costs(fork);
  auto lp = build_path_blocking_lp(fork, 0, 1, costs);
  std::vector<double> zero(3, 0.0);
  auto rows = lp.oracle(zero);
  REQUIRE(rows.size() >= 1);
  double cu = 0;
  for (auto [j, c] : rows[0].coeffs) {
    if (j == 2) cu += c;
    else CHECK((j == 0 || j == 1));
  }
  CHECK(cu == doctest::Approx(1.0));
  CHECK(rows[0].rhs == doctest::Approx(1.0));
  auto sol = solve_path_blocking_lp(fork, 0, 1, costs);
  CHECK(sol.value == doctest::Approx(1.0));
  auto u = round_path_blocking(fork, 0, 1, sol, costs);
  CHECK(u == ns(3, {2}));
  auto d = st_node_double_cut_2approx(fork, 0, 1, costs);
  CHECK(d.cost == 1);
  CHECK(d.removed_nodes == ns(3, {2}));
}

TEST_CASE("uniform solution on D(3,9) is LP-feasible") {
  auto inst = build_dab(3, 9);
  CHECK(dab_uniform_solution_feasible(inst));
}

TEST_CASE("node double cut infeasibility") {
  CHECK_THROWS_AS(st_node_double_cut_2approx(dg(2, {{0, 1, 1}}), 0, 1, {1, 1}), Infeasible);
  auto k3 = complete_graph(3).bidirected();
  CHECK_THROWS_AS(node_double_cut_2approx(k3, node_costs(k3)), Infeasible);
  auto four = dg(4, {{0, 1, 1}, {1, 0, 1}});
  CHECK(node_double_cut_2approx(four, node_costs(four)).cost == 0);
}

TEST_CASE("LP <= OPT <= rounded <= 2 LP") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 3 + seed % 6;
    auto g = random_digraph(n, 0.35, 1, seed);
    NodeId s = 0, t = static_cast<NodeId>(n - 1);
    if (g.has_arc_between(s, t)) continue;
    auto costs = node_costs(g);
    auto sol = st_node_double_cut_2approx(g, s, t, costs);
    auto opt = oracle_st_node_double_cut(g, s, t, costs).value;
    REQUIRE(sol.lp_value.has_value());
    CHECK(*sol.lp_value <= static_cast<double>(opt) + 1e-6);
    CHECK(opt <= sol.cost);
    CHECK(static_cast<double>(sol.cost) <= 2 * *sol.lp_value + 1e-6);
    CHECK(certify_st_node_double_cut(g, sol.removed_nodes, s, t).ok);
  }
}

#include <doctest.h>

#include "cutkit/certify.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/gadgets.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/kcut.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("D(a,b) construction") {
  auto d = build_dab(2, 4);
  CHECK(d.graph.node_count() == 10);
  CHECK(d.r == 1);
  CHECK(d.graph.arc_count() == dab_expected_arc_count(2, 4));
  auto small = build_dab(1, 2);
  CHECK(small.graph.node_count() == 4);
  for (auto k : small.kinds) CHECK(k != DabArcKind::jumping);
  CHECK_THROWS_AS(build_dab(2, 3), InvalidInput);
  // (1,2) -> (2,0) = s and (1,3) -> (2,5) = t
  bool to_s = false, to_t = false;
  for (const Arc& a : d.graph.arcs()) {
    if (a.tail == d.node(1, 2) && a.head == d.s()) to_s = true;
    if (a.tail == d.node(1, 3) && a.head == d.t()) to_t = true;
  }
  CHECK(to_s);
  CHECK(to_t);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 5}, {3, 7}, {3, 9}})
    CHECK(build_dab(a, b).graph.arc_count() == dab_expected_arc_count(a, b));
}

TEST_CASE("D(a,b) distance property") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {2, 6}, {3, 7}, {3, 9}}) {
    auto inst = build_dab(a, b);
    auto rep = check_dab_properties(inst);
    CHECK(rep.property1);
  }
  auto one = check_dab_properties(build_dab(1, 2));
  CHECK(one.property2_checked);
  CHECK(one.min_blocking >= 1);
}

TEST_CASE("skeleton") {
  auto g = build_global_skeleton();
  CHECK(g.node_count() == 6);
  CHECK(g.arc_count() == 12);
  CHECK(check_skeleton(g, 0, 1).ok());
}

TEST_CASE("3-cut gadget examples") {
  auto tri = ug(3, {{0, 1}, {1, 2}, {0, 2}});
  auto m = vc3p_to_node3cut(tri, {0, 1, 2});
  auto c = verify_reduction(tri, m);
  CHECK(c.source_opt == 2);
  CHECK(c.target_opt == 2);
  CHECK(c.ok());

  auto empty = ug(3, {});
  auto e = verify_reduction(empty, vc3p_to_node3cut(empty, {0, 1, 2}));
  CHECK(e.source_opt == 0);
  CHECK(e.target_opt == 0);
  CHECK_THROWS_AS(vc3p_to_node3cut(tri, {0, 0, 1}), InvalidInput);
}

TEST_CASE("bicut gadget examples") {
  auto edge = ug(2, {{0, 1}});
  auto c = verify_reduction(edge, vc4p_to_node_bicut(edge, {0, 1}));
  CHECK(c.source_opt == 1);
  CHECK(c.target_opt == 1);
  auto none = ug(4, {});
  auto e = verify_reduction(none, vc4p_to_node_bicut(none, {0, 1, 2, 3}));
  CHECK(e.source_opt == 0);
  CHECK(e.target_opt == 0);
}

TEST_CASE("s-star gadget examples") {
  auto tri = ug(3, {{0, 1}, {1, 2}, {0, 2}});
  auto c = verify_reduction(tri, vc3p_to_s_star_bicut(tri, {0, 1, 2}));
  CHECK(c.source_opt == 2);
  CHECK(c.target_opt == 2);
  auto ab = ug(2, {{0, 1}});
  auto d = verify_reduction(ab, vc3p_to_s_star_bicut(ab, {0, 1}));
  CHECK(d.source_opt == 1);
  CHECK(d.target_opt == 1);
  auto none = ug(3, {});
  CHECK(verify_reduction(none, vc3p_to_s_star_bicut(none, {0, 1, 2})).target_opt == 0);
}

TEST_CASE("random gadget equivalences") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto p3 = random_partite(3 + seed % 5, 3, 0.5, seed);
    CHECK(verify_reduction(p3.graph, vc3p_to_node3cut(p3.graph, p3.parts)).ok());
    CHECK(verify_reduction(p3.graph, vc3p_to_s_star_bicut(p3.graph, p3.parts)).ok());
    auto p4 = random_partite(4 + seed % 4, 4, 0.5, seed);
    CHECK(verify_reduction(p4.graph, vc4p_to_node_bicut(p4.graph, p4.parts)).ok());
  }
}

TEST_CASE("node 3-cut via node double cut") {
  auto star = star_graph(3);
  auto exact = [](const WeightedDigraph& d, const std::vector<Weight>& c) {
    auto r = oracle_node_double_cut(d, c);
    if (!r.feasible) throw Infeasible("none");
    return r.nodes;
  };
  auto r = node3cut_via_doublecut(star, node_costs(star), exact);
  CHECK(r.removed == ns(4, {0}));
  CHECK(r.cost == 1);

  // two triangles sharing node 0, plus a pendant on node 1
  auto tt = ug(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {1, 5}});
  auto opt = oracle_node_3cut(tt, node_costs(tt)).value;
  CHECK(node3cut_via_doublecut(tt, node_costs(tt), exact).cost == opt);
  auto lp = [](const WeightedDigraph& d, const std::vector<Weight>& c) {
    return node_double_cut_2approx(d, c).removed_nodes;
  };
  auto a = node3cut_via_doublecut(tt, node_costs(tt), lp);
  CHECK(a.cost <= 2 * opt);
  CHECK(certify_node_3cut(tt, a.removed).ok);
}

TEST_CASE("k-regular colouring") {
  auto prism = prism_graph();
  CHECK(is_proper_coloring(prism, kregular_partition(prism, 3), 3));
  auto pet = petersen_graph();
  CHECK(is_proper_coloring(pet, kregular_partition(pet, 3), 3));
  CHECK_THROWS_AS(kregular_partition(complete_graph(4), 3), InvalidInput);
  CHECK_THROWS_AS(kregular_partition(cycle_graph(5), 3), InvalidInput);
}

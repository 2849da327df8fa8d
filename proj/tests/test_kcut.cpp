#include <doctest.h>

#include <algorithm>

#include "cutkit/certify.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/kcut.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("partitions of a path") {
  auto e = enumerate_kcuts_exact(path_graph(4), 2);
  CHECK(e.best == 1);
  auto ones = std::count_if(e.partitions.begin(), e.partitions.end(), [](const Partition& p) { return p.gamma == 1; });
  CHECK(ones == 3);
  CHECK_THROWS_AS(enumerate_kcuts_exact(path_graph(2), 3), InvalidInput);
}

TEST_CASE("stored gamma matches recomputation and blocks are exact") {
  KcutOptions opt;
  opt.mode = EnumerationMode::monte_carlo;
  auto g = random_graph(8, 0.5, 3, 5);
  auto e = enumerate_2approx_kcuts(g, 3, opt);
  for (const auto& p : e.partitions) {
    CHECK(partition_value(g, p.block_of) == p.gamma);
    CHECK(p.blocks().size() == 3);
    CHECK(p.gamma <= 2 * e.best);
  }
}

TEST_CASE("Monte-Carlo enumeration contains the exact 2-approximate set") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 5 + seed % 4;
    auto g = random_graph(n, 0.5, 2, seed);
    for (int k : {2, 3}) {
      auto exact = enumerate_kcuts_exact(g, k);
      KcutOptions opt;
      opt.mode = EnumerationMode::monte_carlo;
      auto mc = enumerate_2approx_kcuts(g, k, opt);
      CHECK(mc.best == exact.best);
      for (const auto& p : exact.partitions)
        CHECK(std::find(mc.partitions.begin(), mc.partitions.end(), p) != mc.partitions.end());
    }
  }
}

TEST_CASE("separating k-cut") {
  auto p = path_graph(3);
  auto a = st_sep_kcut(p, 0, 2, 3);
  CHECK(a.gamma == 2);
  auto c6 = cycle_graph(6);
  CHECK(st_sep_kcut(c6, 0, 3, 3).gamma == 3);
  CHECK(oracle_st_sep_kcut(c6, 0, 3, 3).value == 3);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 4 + seed % 5;
    auto g = random_graph(n, 0.5, 3, seed);
    int k = 3 + static_cast<int>(seed % 2);
    if (static_cast<std::size_t>(k) > n) continue;
    auto r = st_sep_kcut(g, 0, static_cast<NodeId>(n - 1), k);
    CHECK(r.gamma == oracle_st_sep_kcut(g, 0, static_cast<NodeId>(n - 1), k).value);
    CHECK(certify_sep_kcut(g, r.block_of, 0, static_cast<NodeId>(n - 1), k, r.gamma).ok);
  }
}

TEST_CASE("multiway and node 3-cut") {
  // t1 - a - t2
  auto p = path_graph(3);
  std::vector<Weight> c{kInfinite, 1, kInfinite};
  auto m = node_multiway_cut_approx(p, {0, 2}, c);
  CHECK(m.removed == ns(3, {1}));
  auto star = star_graph(3);
  std::vector<Weight> sc{1, kInfinite, kInfinite, kInfinite};
  CHECK(node_multiway_cut_approx(star, {1, 2, 3}, sc).removed == ns(4, {0}));
  CHECK_THROWS_AS(node_multiway_cut_approx(path_graph(2), {0, 1}, {kInfinite, kInfinite}), Infeasible);

  auto s3 = node_3cut_approx(star, node_costs(star));
  CHECK(s3.cost == 1);
  CHECK(s3.removed == ns(4, {0}));

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t n = 4 + seed % 5;
    auto g = random_graph(n, 0.45, 1, seed);
    auto w = node_costs(g);
    auto opt = oracle_node_3cut(g, w);
    if (!opt.feasible) {
      CHECK_THROWS_AS(node_3cut_approx(g, w), Infeasible);
      continue;
    }
    auto r = node_3cut_approx(g, w);
    CHECK(r.lp_value <= static_cast<double>(opt.value) + 1e-6);
    CHECK(r.cost >= opt.value);
    CHECK(static_cast<double>(r.cost) <= 2 * r.lp_value + 1e-6);
    CHECK(certify_node_3cut(g, r.removed).ok);
  }
}

TEST_CASE("per-trial seeds are stable") {
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

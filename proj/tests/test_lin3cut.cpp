#include <doctest.h>

#include "cutkit/certify.hpp"
#include "cutkit/error.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/lin3cut.hpp"
#include "cutkit/oracle.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("fixed lin3cut") {
  // s=0 -> r=1 -> t=2
  auto p = dg(3, {{0, 1, 1}, {1, 2, 1}});
  auto a = lin3cut_fixed_2approx(p, 0, 1, 2);
  CHECK(a.cost == 2);
  CHECK(oracle_lin3cut_fixed(p, 0, 1, 2).value == 2);
  auto st = dg(3, {{0, 2, 1}});
  CHECK(lin3cut_fixed_2approx(st, 0, 1, 2).cost == 1);
}

TEST_CASE("star lin3cut") {
  // s=0 -> a=1 -> t=2
  auto p = dg(3, {{0, 1, 1}, {1, 2, 1}});
  auto a = lin3cut_star_32approx(p, 0, 2);
  CHECK(a.cost == 2);
  CHECK(a.a == ns(3, {2}));
  CHECK(a.b == ns(3, {1, 2}));
  CHECK(a.r == 1);

  auto st = dg(3, {{0, 2, 1}});
  auto b = lin3cut_star_32approx(st, 0, 2);
  CHECK(b.cost == 1);
  CHECK(b.a == ns(3, {2}));
  CHECK(b.b == ns(3, {1, 2}));

  CHECK_THROWS_AS(lin3cut_star_32approx(dg(2, {{0, 1, 1}}), 0, 1), Infeasible);
}

TEST_CASE("lin3cut bounds against the oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 5;
    auto g = random_digraph(n, 0.5, 3, seed);
    NodeId s = 0, t = static_cast<NodeId>(n - 1);
    auto star = lin3cut_star_32approx(g, s, t);
    auto opt = oracle_lin3cut_star(g, s, t).value;
    CHECK(star.cost >= opt);
    CHECK(2 * star.cost <= 3 * opt);
    CHECK(certify_lin3cut(g, star.removed_arcs, s, star.r, t).ok);
    CHECK(beta_sigma(g, star.a, star.b).beta == star.cost);
    CHECK(star.a.contains(t));
    CHECK(star.a.subset_of(star.b));
    CHECK(star.a != star.b);
    CHECK_FALSE(star.b.contains(s));

    auto fixed = lin3cut_fixed_2approx(g, s, 1, t);
    auto fopt = oracle_lin3cut_fixed(g, s, 1, t).value;
    CHECK(fixed.cost >= fopt);
    CHECK(fixed.cost <= 2 * fopt);
    CHECK(certify_lin3cut(g, fixed.removed_arcs, s, 1, t).ok);
  }
}

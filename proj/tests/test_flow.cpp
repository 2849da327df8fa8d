#include <doctest.h>

#include "cutkit/flow.hpp"
#include "cutkit/generators.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

/// Minimum d^in(X) over force_in ⊆ X ⊆ V∖force_out, by enumeration.
Weight brute(const WeightedDigraph& g, const NodeSet& in, const NodeSet& out) {
  Weight best = kInfinite;
  std::size_t n = g.node_count();
  for (std::uint64_t m = 0; m < (1u << n); ++m) {
    auto x = NodeSet::from_mask(n, m);
    if (!in.subset_of(x) || x.intersects(out)) continue;
    best = std::min(best, in_degree(g, x));
  }
  return best;
}

}  // namespace

TEST_CASE("min_cut small cases") {
  auto one = dg(2, {{0, 1, 5}});
  CHECK(min_cut(one, ns(2, {0}), ns(2, {1})).value == 5);
  auto two = dg(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  CHECK(min_cut(two, ns(4, {0}), ns(4, {3})).value == 2);
  auto inf = dg(2, {{0, 1, kInfinite}});
  auto r = min_cut(inf, ns(2, {0}), ns(2, {1}));
  CHECK_FALSE(r.finite());
  CHECK(r.cut_arcs.empty());
}

TEST_CASE("constrained_min_cut on a path") {
  auto p = dg(3, {{0, 1, 1}, {1, 2, 1}});
  auto r = constrained_min_cut(p, ns(3, {2}), ns(3, {0}));
  CHECK(r.value == 1);
  CHECK(r.min_sink_side == ns(3, {2}));
  auto r2 = constrained_min_cut(p, ns(3, {1, 2}), ns(3, {0}));
  CHECK(r2.value == 1);
  CHECK(r2.min_sink_side == ns(3, {1, 2}));
}

TEST_CASE("undirected_min_cut") {
  CHECK(undirected_min_cut(ug(3, {{0, 1}, {1, 2}}), 0, 2).value == 1);
  CHECK(undirected_min_cut(cycle_graph(4), 0, 2).value == 2);
}

TEST_CASE("min_cut matches enumeration, sink sides are extremal") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 6;
    auto g = random_digraph(n, 0.45, 3, seed);
    NodeId s = 0, t = static_cast<NodeId>(n - 1);
    auto r = min_cut(g, ns(n, {s}), ns(n, {t}));
    CHECK(r.value == brute(g, ns(n, {t}), ns(n, {s})));
    CHECK(r.min_sink_side.subset_of(r.max_sink_side));
    CHECK(in_degree(g, r.min_sink_side) == r.value);
    CHECK(in_degree(g, r.max_sink_side) == r.value);
    CHECK(arc_set_weight(g, r.cut_arcs) == r.value);
    // every optimal sink side lies between the two
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      auto x = NodeSet::from_mask(n, m);
      if (!x.contains(t) || x.contains(s) || in_degree(g, x) != r.value) continue;
      CHECK(r.min_sink_side.subset_of(x));
      CHECK(x.subset_of(r.max_sink_side));
    }
  }
}

TEST_CASE("constrained cuts match enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_digraph(6, 0.5, 3, seed);
    auto in = ns(6, {5, static_cast<NodeId>(seed % 4 + 1)});
    auto out = ns(6, {0});
    CHECK(constrained_min_cut(g, in, out).value == brute(g, in, out));
  }
}

TEST_CASE("adding or doubling arcs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_digraph(6, 0.4, 3, seed);
    Weight base = min_cut(g, ns(6, {0}), ns(6, {5})).value;
    auto doubled = g.reweighted([](ArcId, const Arc& a) { return a.weight * 2; });
    CHECK(min_cut(doubled, ns(6, {0}), ns(6, {5})).value == 2 * base);
    std::vector<Arc> more = g.arcs();
    more.push_back({0, 5, 1});
    CHECK(min_cut(WeightedDigraph(6, more), ns(6, {0}), ns(6, {5})).value >= base);
  }
}

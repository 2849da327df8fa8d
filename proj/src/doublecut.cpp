#include "cutkit/doublecut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "cutkit/error.hpp"
#include "cutkit/flow.hpp"
#include "cutkit/parallel.hpp"

namespace cutkit {

namespace {

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

void fill_witness(const WeightedDigraph& reduced, DoubleCutSolution& sol) {
  const std::size_t n = reduced.node_count();
  NodeSet dead = sol.removed_nodes.universe() ? sol.removed_nodes : NodeSet(n);
  sol.S = reach_to(reduced, NodeSet::of(n, {sol.s})) - dead;
  sol.T = reach_to(reduced, NodeSet::of(n, {sol.t})) - dead;
}

bool st_separated(const WeightedDigraph& g, NodeId s, NodeId t, const NodeSet& removed) {
  WeightedDigraph h = remove_nodes(g, removed);
  const std::size_t n = g.node_count();
  NodeSet both = reach_to(h, NodeSet::of(n, {s})) & reach_to(h, NodeSet::of(n, {t}));
  return (both - removed).empty();
}

void check_pair(const WeightedDigraph& g, NodeId s, NodeId t) {
  if (s >= g.node_count() || t >= g.node_count()) throw InvalidInput("terminal out of range");
  if (s == t) throw InvalidInput("terminals must differ");
}

}  // namespace

std::vector<Weight> node_costs(const WeightedDigraph& g) {
  std::vector<Weight> c(g.node_count());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = g.node_weight(static_cast<NodeId>(v));
  return c;
}

Weight node_set_cost(const NodeSet& u, const std::vector<Weight>& costs) {
  Weight w = 0;
  u.for_each([&](NodeId v) { w = add_weight(w, costs[v]); });
  return w;
}

DoubleCutSolution st_edge_double_cut_exact(const WeightedDigraph& g, NodeId s, NodeId t) {
  check_pair(g, s, t);
  const std::size_t n = g.node_count();
  const auto N = static_cast<NodeId>(n);
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.arc_count() + n);
  for (const Arc& a : g.arcs()) {
    arcs.push_back({a.tail, a.head, a.weight});
    arcs.push_back({N + a.head, N + a.tail, a.weight});
  }
  for (NodeId v = 0; v < N; ++v) arcs.push_back({N + v, v, kInfinite});
  WeightedDigraph layered(2 * n, std::move(arcs));
  CutResult cut = min_cut(layered, NodeSet::of(2 * n, {t, N + t}), NodeSet::of(2 * n, {s, N + s}));

  DoubleCutSolution sol;
  sol.kind = DoubleCutSolution::Kind::edge;
  sol.s = s;
  sol.t = t;
  if (!cut.finite()) {
    sol.cost = kInfinite;
    return sol;
  }
  NodeSet a(n), b_complement(n);
  for (NodeId v = 0; v < N; ++v) {
    if (cut.min_sink_side.contains(v)) a.insert(v);
    if (cut.min_sink_side.contains(N + v)) b_complement.insert(v);
  }
  NodeSet b = b_complement.complement();
  sol.removed_arcs = union_in_cut(g, a, b);
  sol.cost = arc_set_weight(g, sol.removed_arcs);
  if (sol.cost != cut.value) throw NumericalError("layered flow value disagrees with recovered cut");
  fill_witness(remove_arcs(g, sol.removed_arcs), sol);
  return sol;
}

DoubleCutSolution edge_double_cut_exact(const WeightedDigraph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("double cut needs at least two nodes");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t) pairs.emplace_back(s, t);
  std::vector<DoubleCutSolution> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i, unsigned) {
    results[i] = st_edge_double_cut_exact(g, pairs[i].first, pairs[i].second);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].cost < results[best].cost) best = i;
  return results[best];
}

std::vector<double> distances_to(const WeightedDigraph& g, NodeId x, const std::vector<double>& d,
                                 std::vector<int>* next) {
  const std::size_t n = g.node_count();
  std::vector<double> dist(n, kUnreachable);
  if (next) next->assign(n, -1);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[x] = d[x];
  pq.push({dist[x], x});
  std::vector<char> done(n, 0);
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (ArcId a : g.in_arcs(v)) {
      NodeId u = g.arc(a).tail;
      double cand = d[u] + dv;
      if (cand < dist[u]) {
        dist[u] = cand;
        if (next) (*next)[u] = static_cast<int>(v);
        pq.push({cand, u});
      }
    }
  }
  return dist;
}

PathBlockingLp build_path_blocking_lp(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                      double sep_tol) {
  check_pair(g, s, t);
  const std::size_t n = g.node_count();
  if (costs.size() != n) throw InvalidInput("cost vector has wrong length");
  PathBlockingLp lp;
  lp.model.num_vars = static_cast<int>(n);
  lp.model.objective.assign(n, 0.0);
  lp.model.fixed_zero.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    bool fixed = v == s || v == t || costs[v] == kInfinite;
    lp.model.fixed_zero[v] = fixed;
    lp.model.objective[v] = fixed ? 0.0 : static_cast<double>(costs[v]);
  }
  const WeightedDigraph* gp = &g;
  lp.oracle = [gp, s, t, sep_tol](std::span<const double> x) {
    std::vector<double> d(x.begin(), x.end());
    std::vector<int> next_s, next_t;
    auto ds = distances_to(*gp, s, d, &next_s);
    auto dt = distances_to(*gp, t, d, &next_t);
    std::vector<LpRow> rows;
    for (std::size_t u = 0; u < d.size(); ++u) {
      if (ds[u] == kUnreachable || dt[u] == kUnreachable) continue;
      if (ds[u] + dt[u] - d[u] >= 1.0 - sep_tol) continue;
      std::vector<double> coef(d.size(), 0.0);
      for (int v = static_cast<int>(u); v >= 0; v = next_s[v]) coef[v] += 1.0;
      for (int v = static_cast<int>(u); v >= 0; v = next_t[v]) coef[v] += 1.0;
      coef[u] -= 1.0;
      LpRow row;
      for (std::size_t v = 0; v < coef.size(); ++v)
        if (coef[v] != 0.0) row.coeffs.emplace_back(static_cast<int>(v), coef[v]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return lp;
}

PathBlockingSolution solve_path_blocking_lp(const WeightedDigraph& g, NodeId s, NodeId t,
                                            const std::vector<Weight>& costs) {
  auto lp = build_path_blocking_lp(g, s, t, costs);
  LpSolution sol = solve_with_separation(lp.model, lp.oracle);
  return {sol.x, sol.value};
}

NodeSet round_path_blocking(const WeightedDigraph& g, NodeId s, NodeId t, const PathBlockingSolution& sol,
                            const std::vector<Weight>& costs) {
  const std::size_t n = g.node_count();
  const auto& d = sol.d;
  auto ds = distances_to(g, s, d);
  auto dt = distances_to(g, t, d);
  std::vector<double> marks{0.0, 0.5};
  for (std::size_t v = 0; v < n; ++v)
    for (double x : {ds[v], dt[v], ds[v] - d[v], dt[v] - d[v]})
      if (x > 0.0 && x < 0.5) marks.push_back(x);
  std::sort(marks.begin(), marks.end());
  std::vector<double> thetas;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i)
    if (marks[i + 1] - marks[i] > 1e-12) thetas.push_back(0.5 * (marks[i] + marks[i + 1]));

  auto usable = [&](const NodeSet& u) {
    if (u.contains(s) || u.contains(t)) return false;
    bool ok = true;
    u.for_each([&](NodeId v) { ok = ok && costs[v] != kInfinite; });
    return ok && st_separated(g, s, t, u);
  };

  std::optional<NodeSet> best;
  Weight best_cost = kInfinite;
  for (double theta : thetas) {
    NodeSet bs(n), bt(n);
    for (NodeId v = 0; v < n; ++v) {
      if (ds[v] <= theta) bs.insert(v);
      if (dt[v] <= theta) bt.insert(v);
    }
    NodeSet u(n);
    for (const Arc& a : g.arcs()) {
      if (bs.contains(a.head) && !bs.contains(a.tail)) u.insert(a.tail);
      if (bt.contains(a.head) && !bt.contains(a.tail)) u.insert(a.tail);
    }
    if (!usable(u)) continue;
    Weight c = node_set_cost(u, costs);
    if (!best || c < best_cost) {
      best = u;
      best_cost = c;
    }
  }
  if (best) return *best;
  NodeSet support(n);
  for (NodeId v = 0; v < n; ++v)
    if (v != s && v != t && costs[v] != kInfinite && d[v] > 1e-9) support.insert(v);
  if (usable(support)) return support;
  throw NumericalError("threshold rounding found no feasible set; LP point is not feasible");
}

DoubleCutSolution st_node_double_cut_2approx(const WeightedDigraph& g, NodeId s, NodeId t,
                                             const std::vector<Weight>& costs) {
  check_pair(g, s, t);
  if (g.has_arc_between(s, t)) throw Infeasible("an arc joins the two terminals");
  PathBlockingSolution lp = solve_path_blocking_lp(g, s, t, costs);
  DoubleCutSolution sol;
  sol.kind = DoubleCutSolution::Kind::node;
  sol.s = s;
  sol.t = t;
  sol.removed_nodes = round_path_blocking(g, s, t, lp, costs);
  sol.cost = node_set_cost(sol.removed_nodes, costs);
  sol.lp_value = lp.value;
  fill_witness(remove_nodes(g, sol.removed_nodes), sol);
  return sol;
}

DoubleCutSolution node_double_cut_2approx(const WeightedDigraph& g, const std::vector<Weight>& costs,
                                          unsigned threads) {
  const std::size_t n = g.node_count();
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t)
      if (!g.has_arc_between(s, t)) pairs.emplace_back(s, t);
  if (pairs.empty()) throw Infeasible("every pair of nodes is joined by an arc");
  std::vector<std::optional<DoubleCutSolution>> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i, unsigned) {
    try {
      results[i] = st_node_double_cut_2approx(g, pairs[i].first, pairs[i].second, costs);
    } catch (const Infeasible&) {
    }
  });
  std::optional<DoubleCutSolution> best;
  double lp_min = std::numeric_limits<double>::infinity();
  for (auto& r : results) {
    if (!r) continue;
    lp_min = std::min(lp_min, *r->lp_value);
    if (!best || r->cost < best->cost) best = *r;
  }
  if (!best) throw Infeasible("no terminal pair admits a finite node double cut");
  best->lp_value = lp_min;
  return *best;
}

}  // namespace cutkit

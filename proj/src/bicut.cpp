#include "cutkit/bicut.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>

#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/flow.hpp"
#include "cutkit/lin3cut.hpp"
#include "cutkit/parallel.hpp"

namespace cutkit {

namespace {

BicutSolution make_solution(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b, std::string method) {
  BicutSolution sol;
  sol.pair = beta_sigma(g, a, b);
  sol.removed_arcs = union_in_cut(g, a, b);
  sol.cost = sol.pair.beta;
  sol.method = std::move(method);
  return sol;
}

void check_node(const WeightedDigraph& g, NodeId v) {
  if (v >= g.node_count()) throw InvalidInput("node out of range");
}

}  // namespace

BicutSolution st_edge_bicut_2approx(const WeightedDigraph& g, NodeId s, NodeId t) {
  check_node(g, s);
  check_node(g, t);
  if (s == t) throw InvalidInput("terminals must differ");
  const std::size_t n = g.node_count();
  FlowSolver flow(g);
  CutResult st = flow.solve(NodeSet::of(n, {s}), NodeSet::of(n, {t}));
  CutResult ts = flow.solve(NodeSet::of(n, {t}), NodeSet::of(n, {s}));
  if (!st.finite() || !ts.finite()) {
    BicutSolution none;
    none.method = "st-edge";
    return none;
  }
  return make_solution(g, st.min_sink_side, ts.min_sink_side, "st-edge");
}

NodeBicutSolution node_bicut_2approx(const WeightedDigraph& g, const std::vector<Weight>& costs, unsigned threads) {
  const std::size_t n = g.node_count();
  if (costs.size() != n) throw InvalidInput("cost vector has wrong length");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t)
      if (!g.has_arc_between(s, t)) pairs.emplace_back(s, t);
  if (pairs.empty()) throw Infeasible("every pair of nodes is joined by an arc");

  const auto N = static_cast<NodeId>(n);
  std::vector<NodeBicutSolution> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i, unsigned) {
    auto [s, t] = pairs[i];
    std::vector<Arc> arcs;
    for (NodeId v = 0; v < N; ++v) arcs.push_back({v, N + v, (v == s || v == t) ? kInfinite : costs[v]});
    for (const Arc& a : g.arcs()) arcs.push_back({N + a.tail, a.head, kInfinite});
    WeightedDigraph split(2 * n, std::move(arcs));
    BicutSolution cut = st_edge_bicut_2approx(split, s, t);
    NodeBicutSolution& r = results[i];
    r.s = s;
    r.t = t;
    r.removed = NodeSet(n);
    if (!cut.found()) return;
    for (ArcId a : cut.removed_arcs) r.removed.insert(split.arc(a).tail);
    r.cost = node_set_cost(r.removed, costs);
  });
  std::optional<NodeBicutSolution> best;
  for (auto& r : results)
    if (r.cost != kInfinite && (!best || r.cost < best->cost)) best = r;
  if (!best) throw Infeasible("no pair of nodes can be separated at finite cost");
  return *best;
}

BicutSolution s_star_edge_bicut_2approx(const WeightedDigraph& g, NodeId s) {
  check_node(g, s);
  if (g.node_count() < 2) throw InvalidInput("need at least two nodes");
  BicutSolution best;
  for (NodeId t = 0; t < g.node_count(); ++t) {
    if (t == s) continue;
    BicutSolution c = st_edge_bicut_2approx(g, s, t);
    if (c.found() && (!best.found() || c.cost < best.cost)) best = c;
  }
  best.method = "s-star";
  return best;
}

std::optional<CutPair> min_uncomparable_pair(const WeightedDigraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("need at least two nodes");
  FlowSolver flow(g);
  // cut[a][b]: minimal sink side containing b and avoiding a.
  std::vector<std::vector<CutResult>> cut(n, std::vector<CutResult>(n));
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b)
      if (a != b) cut[a][b] = flow.solve(NodeSet::of(n, {a}), NodeSet::of(n, {b}));
  std::optional<CutPair> best;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b) {
      if (a == b) continue;
      const CutResult& ca = cut[b][a];
      const CutResult& cb = cut[a][b];
      if (!ca.finite() || !cb.finite()) continue;
      Weight sigma = add_weight(ca.value, cb.value);
      if (!best || sigma < best->sigma) best = beta_sigma(g, ca.min_sink_side, cb.min_sink_side);
    }
  return best;
}

BicutSolution bicut_fixed_intersection(const WeightedDigraph& g, const NodeSet& z) {
  const std::size_t n = g.node_count();
  NodeSet keep = z.complement();
  if (keep.size() < 2) throw InvalidInput("fixed intersection leaves fewer than two nodes");
  Induced sub = induced_subgraph(g, keep);
  DoubleCutSolution dc = edge_double_cut_exact(sub.graph);
  if (dc.cost == kInfinite) {
    BicutSolution none;
    none.method = "fixed-intersection";
    return none;
  }
  NodeSet a = lift(sub.to_parent, dc.S, n) | z;
  NodeSet b = lift(sub.to_parent, dc.T, n) | z;
  return make_solution(g, a, b, "fixed-intersection");
}

BicutSolution bicut_fixed_complement(const WeightedDigraph& g, const NodeSet& w) {
  WeightedDigraph rev = g.reversed();
  BicutSolution r = bicut_fixed_intersection(rev, w);
  if (!r.found()) {
    r.method = "fixed-complement";
    return r;
  }
  return make_solution(g, r.pair.a.complement(), r.pair.b.complement(), "fixed-complement");
}

std::uint64_t tuple_count(std::size_t n) {
  if (n < 6) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < 6; ++i) c *= n - i;
  return c;
}

std::array<NodeId, 6> decode_tuple(std::size_t n, std::uint64_t k) {
  std::array<NodeId, 6> out{};
  std::vector<NodeId> left(n);
  for (std::size_t v = 0; v < n; ++v) left[v] = static_cast<NodeId>(v);
  std::uint64_t block = tuple_count(n) / n;
  for (std::size_t pos = 0; pos < 6; ++pos) {
    std::uint64_t digit = k / block;
    k %= block;
    out[pos] = left[digit];
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(digit));
    if (pos < 5) block /= (n - pos - 1);
  }
  return out;
}

namespace {

struct TupleOutcome {
  bool found = false;
  CutPair pair;
  int family = -1;
};

struct NestedLift {
  NodeSet a_hat;
  NodeSet b_hat;
  bool ok = false;
};

class TupleWorker {
 public:
  explicit TupleWorker(const WeightedDigraph& g) : g_(g), n_(g.node_count()), flow_(g) {}

  TupleOutcome run(const std::array<NodeId, 6>& tup) {
    auto [x, y, w1, w2, z1, z2] = tup;
    const std::size_t n = n_;
    TupleOutcome out;
    CutResult cx = flow_.solve(NodeSet::of(n, {w1, w2, y}), NodeSet::of(n, {x, z1, z2}));
    CutResult cy = flow_.solve(NodeSet::of(n, {w1, w2, x}), NodeSet::of(n, {y, z1, z2}));
    if (!cx.finite() || !cy.finite()) return out;
    const NodeSet& xp = cx.min_sink_side;
    const NodeSet& yp = cy.min_sink_side;
    NodeSet not_x = xp.complement(), not_y = yp.complement();

    auto inside = [](const NodeSet& s, const Arc& a) { return s.contains(a.tail) && s.contains(a.head); };
    WeightedDigraph d1 = g_.reweighted([&](ArcId, const Arc& a) {
      return (inside(xp, a) || inside(yp, a)) ? mul_weight(a.weight, 2) : a.weight;
    });
    WeightedDigraph d2 = g_.reweighted([&](ArcId, const Arc& a) {
      return (inside(not_x, a) || inside(not_y, a)) ? mul_weight(a.weight, 2) : a.weight;
    });
    CutResult cz = min_cut(d1, NodeSet::of(n, {w1, w2, x, y}), NodeSet::of(n, {z1, z2}));
    CutResult cw = min_cut(d2, NodeSet::of(n, {w1, w2}), NodeSet::of(n, {x, y, z1, z2}));

    std::array<std::optional<std::pair<NodeSet, NodeSet>>, 4> cands;
    cands[0].emplace(xp, yp);
    if (cz.finite()) cands[1].emplace(xp | cz.min_sink_side, yp | cz.min_sink_side);
    if (cw.finite()) {
      NodeSet wp = cw.max_sink_side.complement();
      cands[2].emplace(xp - wp, yp - wp);
    }
    const NestedLift& nl = nested(xp, yp);
    if (nl.ok) cands[3].emplace(xp & nl.b_hat, yp | nl.a_hat);

    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!cands[i]) continue;
      const auto& [a, b] = *cands[i];
      if (!uncomparable(a, b)) continue;
      CutPair p = beta_sigma(g_, a, b);
      if (p.beta == kInfinite) continue;
      if (!out.found || p.beta < out.pair.beta) {
        out.found = true;
        out.pair = p;
        out.family = static_cast<int>(i);
      }
    }
    return out;
  }

 private:
  const NestedLift& nested(const NodeSet& xp, const NodeSet& yp) {
    NodeSet core = xp & yp;
    auto key = std::make_pair(core, xp);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    NestedLift nl;
    NodeSet outside = xp.complement();
    if (!core.empty() && !outside.empty() && !(xp - yp).empty()) {
      Contraction c = contract(g_, {core, outside}, nullptr);
      NodeId zc = c.node_map[core.first()];
      NodeId wc = c.node_map[outside.first()];
      std::vector<Arc> kept;
      for (const Arc& a : c.graph.arcs())
        if (!(a.tail == wc && a.head == zc)) kept.push_back(a);
      WeightedDigraph h(c.graph.node_count(), std::move(kept));
      Lin3CutSolution l = lin3cut_star_32approx(h, wc, zc);
      if (l.cost != kInfinite) {
        nl.a_hat = uncontract(c, l.a, n_);
        nl.b_hat = uncontract(c, l.b, n_);
        nl.ok = true;
      }
    }
    return cache_.emplace(std::move(key), std::move(nl)).first->second;
  }

  const WeightedDigraph& g_;
  std::size_t n_;
  FlowSolver flow_;
  std::map<std::pair<NodeSet, NodeSet>, NestedLift> cache_;
};

const char* kFamilyNames[] = {"tuple:x-y", "tuple:union-z", "tuple:minus-w", "tuple:nested"};

}  // namespace

BicutSolution approximate_global_bicut(const WeightedDigraph& g, const GlobalBicutOptions& opt) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InvalidInput("need at least two nodes");
  BicutSolution best;
  auto offer = [&](BicutSolution c) {
    if (c.found() && (!best.found() || c.cost < best.cost)) best = std::move(c);
  };

  std::vector<NodeSet> small{NodeSet(n)};
  for (NodeId u = 0; u < n; ++u) small.push_back(NodeSet::of(n, {u}));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) small.push_back(NodeSet::of(n, {u, v}));
  std::vector<BicutSolution> phase1(2 * small.size());
  parallel_for(small.size(), opt.threads, [&](std::size_t i, unsigned) {
    if (n - small[i].size() < 2) return;
    phase1[2 * i] = bicut_fixed_intersection(g, small[i]);
    phase1[2 * i + 1] = bicut_fixed_complement(g, small[i]);
  });
  for (auto& c : phase1) offer(std::move(c));

  if (auto p = min_uncomparable_pair(g)) offer(make_solution(g, p->a, p->b, "min-uncomparable"));

  const std::uint64_t total = tuple_count(n);
  std::vector<std::uint64_t> picked;
  if (opt.tuple_limit && *opt.tuple_limit < total) {
    std::mt19937_64 rng(opt.seed);
    std::map<std::uint64_t, bool> chosen;
    while (chosen.size() < *opt.tuple_limit) chosen[rng() % total] = true;
    for (auto& [k, _] : chosen) picked.push_back(k);
  } else {
    picked.resize(total);
    for (std::uint64_t k = 0; k < total; ++k) picked[k] = k;
  }
  unsigned threads = std::max(1u, opt.threads);
  std::vector<std::unique_ptr<TupleWorker>> workers;
  for (unsigned w = 0; w < threads; ++w) workers.push_back(std::make_unique<TupleWorker>(g));
  std::vector<TupleOutcome> outcomes(picked.size());
  parallel_for(picked.size(), threads, [&](std::size_t i, unsigned w) {
    outcomes[i] = workers[w]->run(decode_tuple(n, picked[i]));
  });
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].found) continue;
    if (best.found() && outcomes[i].pair.beta >= best.cost) continue;
    BicutSolution c = make_solution(g, outcomes[i].pair.a, outcomes[i].pair.b, kFamilyNames[outcomes[i].family]);
    auto t = decode_tuple(n, picked[i]);
    c.tuple.assign(t.begin(), t.end());
    offer(std::move(c));
  }
  best.tuples_evaluated = picked.size();
  best.tuples_total = total;
  return best;
}

std::array<Weight, 6> bicut_alpha_diagnostics(const WeightedDigraph& g, const NodeSet& x, const NodeSet& y,
                                              const NodeSet& z_prime, const NodeSet& z, const NodeSet& w) {
  NodeSet xy = x | y;
  NodeSet x_only = x - y, y_only = y - x;
  NodeSet core = x & y & z_prime;
  return {arcs_between(g, w - xy, w & x_only), arcs_between(g, w - xy, w & y_only),
          arcs_between(g, w & x_only, z & x_only), arcs_between(g, w & y_only, z & y_only),
          arcs_between(g, z & x_only, core), arcs_between(g, z & y_only, core)};
}

}  // namespace cutkit

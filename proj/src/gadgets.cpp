#include "cutkit/gadgets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/kcut.hpp"

namespace cutkit {

// ------------------------------------------------------------- D_{a,b}

NodeId DabInstance::node(int i, int j) const {
  if (j == 0) return s();
  if (j == b + 1) return t();
  return static_cast<NodeId>(2 + (i - 1) * b + (j - 1));
}

std::size_t dab_expected_arc_count(int a, int b) {
  return static_cast<std::size_t>(4 * a + 2 * a * (b - 1) + 2 * (a - 1) * std::max(0, b - 2));
}

DabInstance build_dab(int a, int b) {
  if (a < 1 || b < 2 * a) throw InvalidInput("D_{a,b} needs a >= 1 and b >= 2a");
  DabInstance inst;
  inst.a = a;
  inst.b = b;
  inst.r = b - 2 * a + 1;
  const std::size_t n = static_cast<std::size_t>(a) * b + 2;
  std::vector<Arc> arcs;
  auto add = [&](NodeId u, NodeId v, DabArcKind k) {
    arcs.push_back({u, v, 1});
    inst.kinds.push_back(k);
  };
  for (int i = 1; i <= a; ++i) {
    add(inst.s(), inst.node(i, 1), DabArcKind::terminal);
    add(inst.node(i, 1), inst.s(), DabArcKind::terminal);
    add(inst.node(i, b), inst.t(), DabArcKind::terminal);
    add(inst.t(), inst.node(i, b), DabArcKind::terminal);
  }
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j < b; ++j) {
      add(inst.node(i, j), inst.node(i, j + 1), DabArcKind::row);
      add(inst.node(i, j + 1), inst.node(i, j), DabArcKind::row);
    }
  for (int i = 1; i < a; ++i)
    for (int j = 2; j <= b - 1; ++j) {
      add(inst.node(i, j), inst.node(i + 1, j - 2), DabArcKind::jumping);
      add(inst.node(i, j), inst.node(i + 1, j + 2), DabArcKind::jumping);
    }
  std::vector<Weight> w(n, 1);
  w[0] = w[1] = kInfinite;
  std::vector<std::string> labels(n);
  labels[0] = "s";
  labels[1] = "t";
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) labels[inst.node(i, j)] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  inst.graph = WeightedDigraph(n, std::move(arcs), std::move(w), std::move(labels), {{"s", 0}, {"t", 1}});
  return inst;
}

namespace {

/// 0-1 shortest path on the reversed graph: cost counts nodes (other than the
/// start) for which `counted` holds.
std::vector<std::size_t> counted_distances(const WeightedDigraph& g, NodeId to, const std::vector<char>& counted) {
  const std::size_t n = g.node_count();
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, inf);
  std::deque<NodeId> dq;
  dist[to] = 0;
  dq.push_back(to);
  while (!dq.empty()) {
    NodeId w = dq.front();
    dq.pop_front();
    std::size_t step = counted[w] && w != to ? 1 : 0;
    for (ArcId e : g.in_arcs(w)) {
      NodeId u = g.arc(e).tail;
      if (dist[w] + step < dist[u]) {
        dist[u] = dist[w] + step;
        if (step == 0) dq.push_front(u);
        else dq.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::size_t> dab_internal_distances(const DabInstance& inst, NodeId to) {
  std::vector<char> internal(inst.graph.node_count(), 1);
  internal[inst.s()] = internal[inst.t()] = 0;
  return counted_distances(inst.graph, to, internal);
}

DabReport check_dab_properties(const DabInstance& inst, const OracleBudget& budget) {
  DabReport rep;
  auto ds = dab_internal_distances(inst, inst.s());
  auto dt = dab_internal_distances(inst, inst.t());
  for (int i = 1; i <= inst.a; ++i)
    for (int j = 1; j <= inst.b; ++j) {
      NodeId v = inst.node(i, j);
      long need_s = j - inst.a, need_t = inst.b - j - inst.a + 1;
      if (static_cast<long>(ds[v]) < need_s || static_cast<long>(dt[v]) < need_t) {
        rep.property1 = false;
        rep.violations.push_back(inst.graph.label(v));
      }
    }
  if (static_cast<std::size_t>(inst.a) * inst.b + 2 <= 12) {
    OracleResult opt = oracle_st_node_double_cut(inst.graph, inst.s(), inst.t(), node_costs(inst.graph), budget);
    rep.property2_checked = true;
    rep.min_blocking = opt.value;
    rep.property2 = opt.feasible && opt.value >= static_cast<Weight>(2 * inst.a - 1);
  } else {
    rep.note = "blocking-set bound skipped: more than 12 nodes";
  }
  return rep;
}

bool dab_uniform_solution_feasible(const DabInstance& inst, double tol) {
  const std::size_t n = inst.graph.node_count();
  std::vector<double> d(n, 1.0 / inst.r);
  d[inst.s()] = d[inst.t()] = 0.0;
  PathBlockingLp lp = build_path_blocking_lp(inst.graph, inst.s(), inst.t(), node_costs(inst.graph), tol);
  return lp.oracle(d).empty();
}

// ------------------------------------------------------------- skeleton

WeightedDigraph build_global_skeleton() {
  enum : NodeId { s, t, a, b, c, d };
  std::vector<Arc> arcs = {{a, s, 1}, {s, a, 1}, {s, c, 1}, {c, a, 1}, {a, b, 1}, {b, c, 1},
                           {c, b, 1}, {d, c, 1}, {b, d, 1}, {d, t, 1}, {t, d, 1}, {t, b, 1}};
  std::vector<Weight> w = {kInfinite, kInfinite, 1, 1, 1, 1};
  return WeightedDigraph(6, std::move(arcs), std::move(w), {"s", "t", "a", "b", "c", "d"}, {{"s", s}, {"t", t}});
}

namespace {

/// Every simple path from `from` to `to` avoiding `banned`; calls f(path).
template <class F>
void simple_paths(const WeightedDigraph& g, NodeId from, NodeId to, NodeId banned, F&& f) {
  std::vector<NodeId> path{from};
  std::vector<char> on(g.node_count(), 0);
  on[from] = 1;
  auto rec = [&](auto& self, NodeId v) -> void {
    if (v == to) {
      f(path);
      return;
    }
    for (ArcId e : g.out_arcs(v)) {
      NodeId w = g.arc(e).head;
      if (on[w] || w == banned) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  rec(rec, from);
}

}  // namespace

SkeletonReport check_skeleton(const WeightedDigraph& d, NodeId s, NodeId t) {
  SkeletonReport rep;
  const std::size_t n = d.node_count();
  std::vector<char> internal(n, 1);
  internal[s] = internal[t] = 0;
  const NodeId none = static_cast<NodeId>(n);

  rep.item1 = true;
  for (NodeId v = 0; v < n; ++v) {
    bool some = false;
    for (NodeId u : {s, t}) {
      std::size_t fewest = std::numeric_limits<std::size_t>::max();
      simple_paths(d, v, u, none, [&](const std::vector<NodeId>& p) {
        std::size_t c = 0;
        for (NodeId x : p) c += internal[x];
        fewest = std::min(fewest, c);
      });
      if (fewest >= 3) some = true;
    }
    if (!some) {
      rep.item1 = false;
      rep.details.push_back("(i) fails at " + d.label(v));
    }
  }

  rep.item2 = true;
  for (NodeId v = 0; v < n; ++v) {
    if (!internal[v]) continue;
    bool fed = false;
    for (ArcId e : d.in_arcs(v)) fed |= d.arc(e).tail == s || d.arc(e).tail == t;
    if (!fed) {
      rep.item2 = false;
      rep.details.push_back("(ii) fails at " + d.label(v));
    }
  }

  rep.item3 = true;
  for (NodeId x = 0; x < n; ++x) {
    if (!internal[x]) continue;
    bool found = false;
    auto check = [&](const std::vector<NodeId>& p) {
      std::size_t c = 0;
      for (NodeId y : p) c += internal[y];
      if (c == 3) found = true;
    };
    simple_paths(d, s, t, x, check);
    simple_paths(d, t, s, x, check);
    if (!found) {
      rep.item3 = false;
      rep.details.push_back("(iii) fails without " + d.label(x));
    }
  }
  return rep;
}

// ------------------------------------------------------------- vertex-cover gadgets

void validate_partition(const UndirectedGraph& g, const std::vector<int>& parts, int k) {
  if (parts.size() != g.node_count()) throw InvalidInput("part labels do not cover every node");
  for (int p : parts)
    if (p < 0 || p >= k) throw InvalidInput("part label out of range");
  for (const Edge& e : g.edges())
    if (parts[e.u] == parts[e.v]) throw InvalidInput("edge inside a part");
}

NodeSet ReductionMap::back_from_nodes(const NodeSet& removed) const {
  NodeSet out(source_n);
  for (NodeId v = 0; v < source_n; ++v)
    if (removed.contains(node_of[v])) out.insert(v);
  return out;
}

NodeSet ReductionMap::back_from_arcs(const std::vector<ArcId>& removed) const {
  NodeSet out(source_n);
  for (NodeId v = 0; v < arc_of.size(); ++v)
    if (std::find(removed.begin(), removed.end(), arc_of[v]) != removed.end()) out.insert(v);
  return out;
}

NodeSet ReductionMap::forward_nodes(const NodeSet& cover) const {
  std::size_t n = undirected ? undirected->node_count() : digraph->node_count();
  NodeSet out(n);
  cover.for_each([&](NodeId v) { out.insert(node_of[v]); });
  return out;
}

std::vector<ArcId> ReductionMap::forward_arcs(const NodeSet& cover) const {
  std::vector<ArcId> out;
  cover.for_each([&](NodeId v) { out.push_back(arc_of[v]); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> source_labels(const UndirectedGraph& g) {
  std::vector<std::string> l;
  for (NodeId v = 0; v < g.node_count(); ++v) l.push_back(g.label(v));
  return l;
}

}  // namespace

ReductionMap vc3p_to_node3cut(const UndirectedGraph& g, const std::vector<int>& parts) {
  validate_partition(g, parts, 3);
  const std::size_t n = g.node_count();
  ReductionMap m;
  m.kind = GadgetKind::node3cut;
  m.source_n = n;
  std::vector<Edge> edges = g.edges();
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>(n + parts[v]), 1});
  std::vector<Weight> w = node_costs(g);
  w.insert(w.end(), 3, kInfinite);
  auto labels = source_labels(g);
  for (const char* h : {"s1", "s2", "s3"}) labels.emplace_back(h);
  m.target_costs = w;
  m.undirected = UndirectedGraph(n + 3, std::move(edges), std::move(w), std::move(labels));
  m.node_of.resize(n);
  std::iota(m.node_of.begin(), m.node_of.end(), 0);
  m.hubs = {static_cast<NodeId>(n), static_cast<NodeId>(n + 1), static_cast<NodeId>(n + 2)};
  return m;
}

ReductionMap vc4p_to_node_bicut(const UndirectedGraph& g, const std::vector<int>& parts) {
  validate_partition(g, parts, 4);
  const std::size_t n = g.node_count();
  const NodeId s = static_cast<NodeId>(n), t = static_cast<NodeId>(n + 1);
  std::vector<Arc> arcs;
  auto both = [&](NodeId u, NodeId v) {
    arcs.push_back({u, v, 1});
    arcs.push_back({v, u, 1});
  };
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (parts[u] == parts[v]) both(u, v);
  for (const Edge& e : g.edges()) both(e.u, e.v);
  for (NodeId u = 0; u < n; ++u) {
    switch (parts[u]) {
      case 0: both(s, u); break;
      case 1:
        arcs.push_back({s, u, 1});
        arcs.push_back({t, u, 1});
        break;
      case 2:
        arcs.push_back({u, s, 1});
        arcs.push_back({u, t, 1});
        break;
      default: both(t, u); break;
    }
  }
  ReductionMap m;
  m.kind = GadgetKind::node_bicut;
  m.source_n = n;
  std::vector<Weight> w = node_costs(g);
  w.push_back(kInfinite);
  w.push_back(kInfinite);
  auto labels = source_labels(g);
  labels.emplace_back("s");
  labels.emplace_back("t");
  m.target_costs = w;
  m.digraph = WeightedDigraph(n + 2, std::move(arcs), std::move(w), std::move(labels), {{"s", s}, {"t", t}});
  m.node_of.resize(n);
  std::iota(m.node_of.begin(), m.node_of.end(), 0);
  m.hubs = {s, t};
  return m;
}

ReductionMap vc3p_to_s_star_bicut(const UndirectedGraph& g, const std::vector<int>& parts) {
  validate_partition(g, parts, 3);
  const std::size_t n = g.node_count();
  const NodeId s = static_cast<NodeId>(2 * n), t = static_cast<NodeId>(2 * n + 1);
  auto one = [](NodeId v) { return v; };
  auto two = [n](NodeId v) { return static_cast<NodeId>(n + v); };
  enum { A, B, C };
  ReductionMap m;
  m.kind = GadgetKind::s_star_bicut;
  m.source_n = n;
  std::vector<Arc> arcs;
  for (NodeId v = 0; v < n; ++v) {
    m.arc_of.push_back(static_cast<ArcId>(arcs.size()));
    arcs.push_back({one(v), two(v), g.node_weight(v)});
  }
  auto inf = [&](NodeId u, NodeId v) { arcs.push_back({u, v, kInfinite}); };
  for (NodeId v = 0; v < n; ++v) {
    if (parts[v] == A) {
      inf(s, one(v));
      inf(t, one(v));
    } else if (parts[v] == B) {
      inf(s, one(v));
      inf(two(v), s);
    } else {
      inf(two(v), s);
      inf(two(v), t);
    }
  }
  for (const Edge& e : g.edges()) {
    NodeId x = e.u, y = e.v;
    if (parts[x] > parts[y]) std::swap(x, y);
    inf(two(x), one(y));  // AB, AC, BC
  }
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v) {
      if (parts[u] == parts[v] && parts[u] != B) inf(two(v), one(u));  // AA, CC
      if (parts[u] == A && parts[v] == C) {
        inf(one(v), one(u));  // CA1
        inf(two(v), two(u));  // CA2
      }
    }
  std::vector<std::string> labels;
  for (NodeId v = 0; v < n; ++v) labels.push_back(g.label(v) + "_1");
  for (NodeId v = 0; v < n; ++v) labels.push_back(g.label(v) + "_2");
  labels.emplace_back("s");
  labels.emplace_back("t");
  m.digraph = WeightedDigraph(2 * n + 2, std::move(arcs), {}, std::move(labels), {{"s", s}, {"t", t}});
  m.node_of.resize(n);
  std::iota(m.node_of.begin(), m.node_of.end(), 0);
  m.hubs = {s, t};
  return m;
}

ReductionMap build_reduction(GadgetKind kind, const UndirectedGraph& g, const std::vector<int>& parts) {
  switch (kind) {
    case GadgetKind::node3cut: return vc3p_to_node3cut(g, parts);
    case GadgetKind::node_bicut: return vc4p_to_node_bicut(g, parts);
    default: return vc3p_to_s_star_bicut(g, parts);
  }
}

bool is_vertex_cover(const UndirectedGraph& g, const NodeSet& cover) {
  for (const Edge& e : g.edges())
    if (!cover.contains(e.u) && !cover.contains(e.v)) return false;
  return true;
}

bool target_feasible(const ReductionMap& map, const NodeSet& removed_nodes, const std::vector<ArcId>& removed_arcs) {
  switch (map.kind) {
    case GadgetKind::node3cut: {
      for (NodeId h : map.hubs)
        if (removed_nodes.contains(h)) return false;
      return component_count(*map.undirected, removed_nodes) >= 3;
    }
    case GadgetKind::node_bicut: {
      const WeightedDigraph& d = *map.digraph;
      const std::size_t n = d.node_count();
      WeightedDigraph h = remove_nodes(d, removed_nodes);
      std::vector<NodeSet> fwd(n);
      for (NodeId v = 0; v < n; ++v)
        if (!removed_nodes.contains(v)) fwd[v] = reach(h, NodeSet::of(n, {v}));
      for (NodeId x = 0; x < n; ++x)
        for (NodeId y = x + 1; y < n; ++y)
          if (!removed_nodes.contains(x) && !removed_nodes.contains(y) && !fwd[x].contains(y) &&
              !fwd[y].contains(x))
            return true;
      return false;
    }
    default: {
      const WeightedDigraph& d = *map.digraph;
      const std::size_t n = d.node_count();
      WeightedDigraph h = remove_arcs(d, removed_arcs);
      NodeId s = map.hubs[0];
      NodeSet from_s = reach(h, NodeSet::of(n, {s}));
      NodeSet to_s = reach_to(h, NodeSet::of(n, {s}));
      for (NodeId v = 0; v < n; ++v)
        if (v != s && !from_s.contains(v) && !to_s.contains(v)) return true;
      return false;
    }
  }
}

ReductionCheck verify_reduction(const UndirectedGraph& g, const ReductionMap& map, const OracleBudget& budget) {
  ReductionCheck chk;
  const auto costs = node_costs(g);
  OracleResult cover = oracle_vertex_cover(g, costs, budget);
  chk.source_opt = cover.value;

  OracleResult target;
  NodeSet back(g.node_count());
  switch (map.kind) {
    case GadgetKind::node3cut:
      target = oracle_node_3cut(*map.undirected, map.target_costs, budget);
      back = map.back_from_nodes(target.nodes);
      break;
    case GadgetKind::node_bicut:
      target = oracle_node_bicut(*map.digraph, map.target_costs, budget);
      back = map.back_from_nodes(target.nodes);
      break;
    default:
      target = raw::s_star_edge_bicut(*map.digraph, map.hubs[0], budget);
      back = map.back_from_arcs(target.arcs);
      break;
  }
  if (!target.feasible) return chk;
  chk.target_opt = target.value;
  chk.back_feasible = is_vertex_cover(g, back);
  chk.back_cost = node_set_cost(back, costs);

  if (map.kind == GadgetKind::s_star_bicut) {
    auto arcs = map.forward_arcs(cover.nodes);
    chk.forward_feasible = target_feasible(map, NodeSet(map.digraph->node_count()), arcs);
    chk.forward_cost = arc_set_weight(*map.digraph, arcs);
  } else {
    NodeSet fwd = map.forward_nodes(cover.nodes);
    chk.forward_feasible = target_feasible(map, fwd, {});
    chk.forward_cost = node_set_cost(fwd, map.target_costs);
  }
  return chk;
}

// ------------------------------------------------------------- Node-3-Cut via double cut

WeightedDigraph node3cut_doublecut_instance(const UndirectedGraph& g, NodeId s) {
  const std::size_t n = g.node_count();
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v, 1});
    arcs.push_back({e.v, e.u, 1});
  }
  for (NodeId v = 0; v < n; ++v)
    if (v != s) arcs.push_back({v, s, 1});
  return WeightedDigraph(n, std::move(arcs));
}

Node3CutResult node3cut_via_doublecut(const UndirectedGraph& g, const std::vector<Weight>& costs,
                                      const NodeDoubleCutSolver& solver) {
  const std::size_t n = g.node_count();
  if (n < 3) throw InvalidInput("node 3-cut needs at least three nodes");
  if (costs.size() != n) throw InvalidInput("cost vector has wrong length");
  std::optional<Node3CutResult> best;
  for (NodeId s = 0; s < n; ++s) {
    WeightedDigraph d = node3cut_doublecut_instance(g, s);
    std::vector<Weight> c = costs;
    c[s] = kInfinite;
    NodeSet u;
    try {
      u = solver(d, c);
    } catch (const Infeasible&) {
      continue;
    }
    Weight cost = node_set_cost(u, costs);
    if (!best || cost < best->cost) best = Node3CutResult{u, cost, s, component_count(g, u)};
  }
  if (!best) throw Infeasible("no hub admits a node double cut");
  return *best;
}

// ------------------------------------------------------------- Brooks colouring

bool is_proper_coloring(const UndirectedGraph& g, const std::vector<int>& colors, int k) {
  if (colors.size() != g.node_count()) return false;
  for (int c : colors)
    if (c < 0 || c >= k) return false;
  for (const Edge& e : g.edges())
    if (colors[e.u] == colors[e.v]) return false;
  return true;
}

namespace {

using Adj = std::vector<std::vector<NodeId>>;

bool greedy(const Adj& adj, const std::vector<NodeId>& order, int k, std::vector<int>& color) {
  for (NodeId v : order) {
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    for (NodeId w : adj[v])
      if (color[w] >= 0 && color[w] <= k) used[color[w]] = 1;
    int c = 0;
    while (c < k && used[c]) ++c;
    if (c == k) return false;
    color[v] = c;
  }
  return true;
}

/// Brooks ordering: x, y (non-adjacent neighbours of v, G - {x,y} connected), then
/// the rest by decreasing BFS depth from v, v last.
bool brooks_component(const Adj& adj, const std::vector<NodeId>& comp, int k, std::vector<int>& color) {
  std::vector<char> in_comp(adj.size(), 0);
  for (NodeId v : comp) in_comp[v] = 1;
  for (NodeId v : comp) {
    const auto& nb = adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        NodeId x = nb[i], y = nb[j];
        if (x == y || std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end()) continue;
        std::vector<char> seen(adj.size(), 0);
        seen[x] = seen[y] = 1;
        std::vector<NodeId> bfs{v};
        seen[v] = 1;
        for (std::size_t h = 0; h < bfs.size(); ++h)
          for (NodeId w : adj[bfs[h]])
            if (!seen[w]) {
              seen[w] = 1;
              bfs.push_back(w);
            }
        if (bfs.size() + 2 != comp.size()) continue;
        std::vector<NodeId> order{x, y};
        order.insert(order.end(), bfs.rbegin(), bfs.rend());
        std::vector<int> trial = color;
        if (greedy(adj, order, k, trial)) {
          color = std::move(trial);
          return true;
        }
      }
  }
  return false;
}

bool backtrack(const Adj& adj, const std::vector<NodeId>& order, std::size_t i, int k, std::vector<int>& color) {
  if (i == order.size()) return true;
  NodeId v = order[i];
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (NodeId w : adj[v]) ok &= color[w] != c;
    if (!ok) continue;
    color[v] = c;
    if (backtrack(adj, order, i + 1, k, color)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::vector<int> kregular_partition(const UndirectedGraph& g, int k, std::uint64_t seed) {
  if (k < 3) throw InvalidInput("k must be at least 3");
  if (!g.is_regular(static_cast<std::size_t>(k))) throw InvalidInput("graph is not k-regular");
  const std::size_t n = g.node_count();
  Adj adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  auto comp = components(g, NodeSet(n));
  int count = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> color(n, -1);
  std::mt19937_64 rng(seed);
  for (int c = 0; c < count; ++c) {
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v)
      if (comp[v] == c) members.push_back(v);
    bool complete = members.size() == static_cast<std::size_t>(k) + 1;
    for (NodeId v : members) complete &= adj[v].size() == static_cast<std::size_t>(k);
    if (complete) throw InvalidInput("complete graph K_{k+1} has no k-colouring");
    if (brooks_component(adj, members, k, color)) continue;
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      std::vector<NodeId> order = members;
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
      std::vector<int> trial = color;
      if (greedy(adj, order, k, trial)) {
        color = std::move(trial);
        done = true;
      }
    }
    if (!done && !backtrack(adj, members, 0, k, color)) throw InvalidInput("no k-colouring found");
  }
  return color;
}

}  // namespace cutkit

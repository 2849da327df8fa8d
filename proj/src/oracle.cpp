#include "cutkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include "cutkit/error.hpp"

namespace cutkit {

namespace {

using Mask = std::uint32_t;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                     std::chrono::duration<double>(seconds))) {}
  void tick() {
    if (++count_ % 4096 == 0 && std::chrono::steady_clock::now() > end_)
      throw BudgetExceeded("oracle time cap exceeded");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t count_ = 0;
};

void require_nodes(std::size_t count, const OracleBudget& b) {
  if (count > b.max_nodes || count > 30) throw BudgetExceeded("oracle refuses " + std::to_string(count) + " nodes");
}

void require_space(double size, const OracleBudget& b) {
  if (size > static_cast<double>(b.max_subsets)) throw BudgetExceeded("oracle search space too large");
}

Mask bit(NodeId v) { return Mask{1} << v; }

NodeSet to_set(std::size_t n, Mask m) { return NodeSet::from_mask(n, m); }

NodeId lowest(Mask m) { return static_cast<NodeId>(std::countr_zero(m)); }

struct Arcs {
  std::size_t n = 0;
  std::vector<NodeId> tail, head;
  std::vector<Weight> w;

  explicit Arcs(const WeightedDigraph& g) : n(g.node_count()) {
    for (const Arc& a : g.arcs()) {
      tail.push_back(a.tail);
      head.push_back(a.head);
      w.push_back(a.weight);
    }
  }
  std::size_t size() const { return w.size(); }
  bool enters(std::size_t e, Mask x) const { return (x >> head[e] & 1) && !(x >> tail[e] & 1); }

  Weight din(Mask x) const {
    Weight c = 0;
    for (std::size_t e = 0; e < size(); ++e)
      if (enters(e, x)) c = add_weight(c, w[e]);
    return c;
  }
  Weight beta(Mask a, Mask b) const {
    Weight c = 0;
    for (std::size_t e = 0; e < size(); ++e)
      if (enters(e, a) || enters(e, b)) c = add_weight(c, w[e]);
    return c;
  }
  std::vector<ArcId> union_in(Mask a, Mask b) const {
    std::vector<ArcId> out;
    for (std::size_t e = 0; e < size(); ++e)
      if (enters(e, a) || enters(e, b)) out.push_back(static_cast<ArcId>(e));
    return out;
  }
  std::vector<Weight> din_table() const {
    std::vector<Weight> t(std::size_t{1} << n);
    for (Mask x = 0; x < t.size(); ++x) t[x] = din(x);
    return t;
  }
};

/// reach[u] = nodes reachable from u among `present`, given out-neighbour masks.
std::vector<Mask> closure(const std::vector<Mask>& out, Mask present) {
  std::vector<Mask> reach(out.size(), 0);
  for (std::size_t u = 0; u < out.size(); ++u) {
    if (!(present >> u & 1)) continue;
    Mask r = bit(static_cast<NodeId>(u)), frontier = r;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out[std::countr_zero(f)];
      next &= present & ~r;
      r |= next;
      frontier = next;
    }
    reach[u] = r;
  }
  return reach;
}

std::vector<Mask> out_masks(const Arcs& a, const std::vector<char>* removed_arc, Mask present) {
  std::vector<Mask> out(a.n, 0);
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (removed_arc && (*removed_arc)[e]) continue;
    if (!(present >> a.tail[e] & 1) || !(present >> a.head[e] & 1)) continue;
    out[a.tail[e]] |= bit(a.head[e]);
  }
  return out;
}

// Feasibility predicates over a closure restricted to `present`.

bool some_pair_without_common_ancestor(const std::vector<Mask>& reach, Mask present) {
  for (Mask xs = present; xs; xs &= xs - 1) {
    NodeId x = lowest(xs);
    for (Mask ys = xs & (xs - 1); ys; ys &= ys - 1) {
      NodeId y = lowest(ys);
      bool common = false;
      for (Mask us = present; us && !common; us &= us - 1) {
        Mask r = reach[lowest(us)];
        common = (r >> x & 1) && (r >> y & 1);
      }
      if (!common) return true;
    }
  }
  return false;
}

int source_component_count(const std::vector<Mask>& reach, Mask present) {
  int count = 0;
  for (Mask vs = present; vs; vs &= vs - 1) {
    NodeId v = lowest(vs);
    bool source = true, representative = true;
    for (Mask us = present; us; us &= us - 1) {
      NodeId u = lowest(us);
      if (!(reach[u] >> v & 1)) continue;
      if (!(reach[v] >> u & 1)) source = false;
      else if (u < v) representative = false;
    }
    if (source && representative) ++count;
  }
  return count;
}

bool some_pair_mutually_unreachable(const std::vector<Mask>& reach, Mask present, NodeId* x_out = nullptr,
                                    NodeId* y_out = nullptr) {
  for (Mask xs = present; xs; xs &= xs - 1) {
    NodeId x = lowest(xs);
    for (Mask ys = xs & (xs - 1); ys; ys &= ys - 1) {
      NodeId y = lowest(ys);
      if (!(reach[x] >> y & 1) && !(reach[y] >> x & 1)) {
        if (x_out) *x_out = x;
        if (y_out) *y_out = y;
        return true;
      }
    }
  }
  return false;
}

bool st_double_cut_ok(const std::vector<Mask>& reach, Mask present, NodeId s, NodeId t) {
  for (Mask us = present; us; us &= us - 1) {
    Mask r = reach[lowest(us)];
    if ((r >> s & 1) && (r >> t & 1)) return false;
  }
  return true;
}

// Node-subset search. `sorted` walks subsets by (cost, size, mask) and stops at
// the first feasible one; otherwise every subset is visited in mask order.
template <class Feasible>
OracleResult node_search(std::size_t n, const std::vector<NodeId>& free, const std::vector<Weight>& costs,
                         const OracleBudget& b, bool sorted, Feasible&& feasible) {
  require_nodes(free.size(), b);
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  require_space(std::ldexp(1.0, static_cast<int>(free.size())), b);
  Deadline clock(b.time_cap_seconds);
  const std::size_t count = std::size_t{1} << free.size();
  auto removed_of = [&](std::size_t sub) {
    Mask m = 0;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (sub >> i & 1) m |= bit(free[i]);
    return m;
  };
  auto cost_of = [&](Mask m) {
    Weight c = 0;
    for (Mask r = m; r; r &= r - 1) c = add_weight(c, costs[lowest(r)]);
    return c;
  };
  OracleResult res;
  res.nodes = NodeSet(n);
  if (sorted) {
    std::vector<std::pair<Weight, Mask>> order(count);
    for (std::size_t sub = 0; sub < count; ++sub) {
      Mask m = removed_of(sub);
      order[sub] = {cost_of(m), m};
    }
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      int px = std::popcount(x.second), py = std::popcount(y.second);
      if (px != py) return px < py;
      return x.second < y.second;
    });
    for (const auto& [c, m] : order) {
      clock.tick();
      if (feasible(m)) {
        res.feasible = true;
        res.value = c;
        res.nodes = to_set(n, m);
        return res;
      }
    }
    return res;
  }
  for (std::size_t sub = 0; sub < count; ++sub) {
    clock.tick();
    Mask m = removed_of(sub);
    Weight c = cost_of(m);
    if (res.feasible && c >= res.value) continue;
    if (feasible(m)) {
      res.feasible = true;
      res.value = c;
      res.nodes = to_set(n, m);
    }
  }
  return res;
}

std::vector<NodeId> removable(std::size_t n, const std::vector<Weight>& costs, std::initializer_list<NodeId> fixed) {
  if (costs.size() != n) throw InvalidInput("cost vector has wrong length");
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v)
    if (costs[v] != kInfinite && std::find(fixed.begin(), fixed.end(), v) == fixed.end()) out.push_back(v);
  return out;
}

// Arc-subset search over finite arcs; infinite arcs always stay.
template <class Feasible>
OracleResult arc_search(const std::vector<Weight>& weights, const OracleBudget& b, Feasible&& feasible) {
  std::vector<std::size_t> finite;
  for (std::size_t e = 0; e < weights.size(); ++e)
    if (weights[e] != kInfinite) finite.push_back(e);
  if (finite.size() > 62) throw BudgetExceeded("too many arcs for raw enumeration");
  require_space(std::ldexp(1.0, static_cast<int>(finite.size())), b);
  Deadline clock(b.time_cap_seconds);
  OracleResult res;
  std::vector<char> removed(weights.size(), 0);
  const std::uint64_t count = std::uint64_t{1} << finite.size();
  for (std::uint64_t sub = 0; sub < count; ++sub) {
    clock.tick();
    Weight c = 0;
    for (std::size_t i = 0; i < finite.size(); ++i) {
      removed[finite[i]] = static_cast<char>(sub >> i & 1);
      if (removed[finite[i]]) c += weights[finite[i]];
    }
    if (res.feasible && c >= res.value) continue;
    if (feasible(removed)) {
      res.feasible = true;
      res.value = c;
      res.arcs.clear();
      for (std::size_t e = 0; e < removed.size(); ++e)
        if (removed[e]) res.arcs.push_back(static_cast<ArcId>(e));
    }
  }
  return res;
}

void check_node(const WeightedDigraph& g, NodeId v) {
  if (v >= g.node_count()) throw InvalidInput("node id out of range");
}

Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

void fill_pair(OracleResult& res, const Arcs& a, Mask x, Mask y, Weight value) {
  res.feasible = true;
  res.value = value;
  res.a = to_set(a.n, x);
  res.b = to_set(a.n, y);
  res.arcs = a.union_in(x, y);
}

}  // namespace

// ---------------------------------------------------------------- double cut

OracleResult oracle_edge_double_cut(const WeightedDigraph& g, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  auto din = arcs.din_table();
  Deadline clock(b.time_cap_seconds);
  const Mask full = full_mask(n);
  OracleResult res;
  for (Mask x = 1; x <= full; ++x) {
    if (din[x] == kInfinite || (res.feasible && din[x] >= res.value)) continue;
    Mask rest = full & ~x;
    for (Mask y = rest; y; y = (y - 1) & rest) {
      clock.tick();
      Weight c = add_weight(din[x], din[y]);
      if (c == kInfinite || (res.feasible && c >= res.value)) continue;
      fill_pair(res, arcs, x, y, c);
      res.s = lowest(x);
      res.t = lowest(y);
    }
  }
  return res;
}

OracleResult oracle_st_edge_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  check_node(g, s);
  check_node(g, t);
  if (s == t) throw InvalidInput("s and t must differ");
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  auto din = arcs.din_table();
  Deadline clock(b.time_cap_seconds);
  const Mask full = full_mask(n);
  OracleResult res;
  res.s = s;
  res.t = t;
  Mask others = full & ~bit(s) & ~bit(t);
  for (Mask xs = others;; xs = (xs - 1) & others) {
    Mask x = xs | bit(s);
    if (din[x] != kInfinite && !(res.feasible && din[x] >= res.value)) {
      Mask rest = others & ~xs;
      for (Mask ys = rest;; ys = (ys - 1) & rest) {
        clock.tick();
        Mask y = ys | bit(t);
        Weight c = add_weight(din[x], din[y]);
        if (c != kInfinite && !(res.feasible && c >= res.value)) fill_pair(res, arcs, x, y, c);
        if (ys == 0) break;
      }
    }
    if (xs == 0) break;
  }
  return res;
}

OracleResult oracle_node_double_cut(const WeightedDigraph& g, const std::vector<Weight>& costs,
                                    const OracleBudget& b) {
  const std::size_t n = g.node_count();
  Arcs arcs(g);
  const Mask full = full_mask(n);
  OracleResult res = node_search(n, removable(n, costs, {}), costs, b, true, [&](Mask removed) {
    Mask present = full & ~removed;
    if (std::popcount(present) < 2) return false;
    return source_component_count(closure(out_masks(arcs, nullptr, present), present), present) >= 2;
  });
  return res;
}

OracleResult oracle_st_node_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                       const OracleBudget& b) {
  const std::size_t n = g.node_count();
  check_node(g, s);
  check_node(g, t);
  if (s == t) throw InvalidInput("s and t must differ");
  Arcs arcs(g);
  const Mask full = full_mask(n);
  OracleResult res = node_search(n, removable(n, costs, {s, t}), costs, b, true, [&](Mask removed) {
    Mask present = full & ~removed;
    return st_double_cut_ok(closure(out_masks(arcs, nullptr, present), present), present, s, t);
  });
  res.s = s;
  res.t = t;
  return res;
}

// ---------------------------------------------------------------- bicut

OracleResult oracle_edge_bicut(const WeightedDigraph& g, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  require_nodes(n, b);
  require_space(std::pow(4.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  auto din = arcs.din_table();
  Deadline clock(b.time_cap_seconds);
  const Mask full = full_mask(n);
  OracleResult res;
  for (Mask x = 1; x < full; ++x) {
    if (din[x] == kInfinite || (res.feasible && din[x] >= res.value)) continue;
    for (Mask y = x + 1; y < full; ++y) {
      clock.tick();
      if (!(x & ~y) || !(y & ~x)) continue;
      if (din[y] == kInfinite || (res.feasible && din[y] >= res.value)) continue;
      Weight c = arcs.beta(x, y);
      if (c == kInfinite || (res.feasible && c >= res.value)) continue;
      fill_pair(res, arcs, x, y, c);
      res.s = lowest(y & ~x);
      res.t = lowest(x & ~y);
    }
  }
  return res;
}

OracleResult oracle_min_uncomparable_sigma(const WeightedDigraph& g, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  require_nodes(n, b);
  require_space(std::pow(4.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  auto din = arcs.din_table();
  Deadline clock(b.time_cap_seconds);
  const Mask full = full_mask(n);
  OracleResult res;
  for (Mask x = 1; x < full; ++x) {
    for (Mask y = x + 1; y < full; ++y) {
      clock.tick();
      if (!(x & ~y) || !(y & ~x)) continue;
      Weight c = add_weight(din[x], din[y]);
      if (c == kInfinite || (res.feasible && c >= res.value)) continue;
      fill_pair(res, arcs, x, y, c);
    }
  }
  return res;
}

OracleResult oracle_st_edge_bicut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  check_node(g, s);
  check_node(g, t);
  if (s == t) throw InvalidInput("s and t must differ");
  require_nodes(n, b);
  require_space(std::pow(4.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  auto din = arcs.din_table();
  Deadline clock(b.time_cap_seconds);
  const Mask others = full_mask(n) & ~bit(s) & ~bit(t);
  OracleResult res;
  res.s = s;
  res.t = t;
  // x ∋ t (the side reaching t), y ∋ s.
  for (Mask xs = others;; xs = (xs - 1) & others) {
    Mask x = xs | bit(t);
    if (din[x] != kInfinite && !(res.feasible && din[x] >= res.value)) {
      for (Mask ys = others;; ys = (ys - 1) & others) {
        clock.tick();
        Mask y = ys | bit(s);
        Weight c = arcs.beta(x, y);
        if (c != kInfinite && !(res.feasible && c >= res.value)) fill_pair(res, arcs, x, y, c);
        if (ys == 0) break;
      }
    }
    if (xs == 0) break;
  }
  return res;
}

OracleResult oracle_s_star_edge_bicut(const WeightedDigraph& g, NodeId s, const OracleBudget& b) {
  check_node(g, s);
  OracleResult best;
  for (NodeId t = 0; t < g.node_count(); ++t) {
    if (t == s) continue;
    OracleResult r = oracle_st_edge_bicut(g, s, t, b);
    if (r.feasible && (!best.feasible || r.value < best.value)) best = std::move(r);
  }
  best.s = s;
  return best;
}

OracleResult oracle_node_bicut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  Arcs arcs(g);
  const Mask full = full_mask(n);
  OracleResult res = node_search(n, removable(n, costs, {}), costs, b, true, [&](Mask removed) {
    Mask present = full & ~removed;
    return some_pair_mutually_unreachable(closure(out_masks(arcs, nullptr, present), present), present);
  });
  if (res.feasible) {
    Mask present = full & ~static_cast<Mask>(res.nodes.mask());
    some_pair_mutually_unreachable(closure(out_masks(arcs, nullptr, present), present), present, &res.s, &res.t);
  }
  return res;
}

OracleResult oracle_bicut_fixed_intersection(const WeightedDigraph& g, const NodeSet& z, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  Deadline clock(b.time_cap_seconds);
  const Mask zm = static_cast<Mask>(z.mask());
  const Mask rest = full_mask(n) & ~zm;
  OracleResult res;
  for (Mask x = rest; x; x = (x - 1) & rest) {
    Mask other = rest & ~x;
    for (Mask y = other; y; y = (y - 1) & other) {
      clock.tick();
      Weight c = arcs.beta(x | zm, y | zm);
      if (c == kInfinite || (res.feasible && c >= res.value)) continue;
      fill_pair(res, arcs, x | zm, y | zm, c);
    }
  }
  return res;
}

OracleResult oracle_bicut_fixed_complement(const WeightedDigraph& g, const NodeSet& w, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  Deadline clock(b.time_cap_seconds);
  const Mask u = full_mask(n) & ~static_cast<Mask>(w.mask());
  OracleResult res;
  // A ⊆ U; B = (U∖A) ∪ C with C ⊊ A.
  for (Mask x = u; x; x = (x - 1) & u) {
    Mask only_b = u & ~x;
    if (!only_b) continue;
    for (Mask c = (x - 1) & x;; c = (c - 1) & x) {
      clock.tick();
      Mask y = only_b | c;
      Weight v = arcs.beta(x, y);
      if (v != kInfinite && !(res.feasible && v >= res.value)) fill_pair(res, arcs, x, y, v);
      if (c == 0) break;
    }
  }
  return res;
}

// ---------------------------------------------------------------- lin3cut

OracleResult oracle_lin3cut_fixed(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  check_node(g, s);
  check_node(g, r);
  check_node(g, t);
  if (s == r || r == t || s == t) throw InvalidInput("s, r, t must be distinct");
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  Deadline clock(b.time_cap_seconds);
  const Mask others = full_mask(n) & ~bit(s) & ~bit(r) & ~bit(t);
  OracleResult res;
  res.s = s;
  res.r = r;
  res.t = t;
  for (Mask xs = others;; xs = (xs - 1) & others) {
    Mask a = xs | bit(t);
    Mask rest = others & ~xs;
    for (Mask ys = rest;; ys = (ys - 1) & rest) {
      clock.tick();
      Mask bb = a | bit(r) | ys;
      Weight c = arcs.beta(a, bb);
      if (c != kInfinite && !(res.feasible && c >= res.value)) fill_pair(res, arcs, a, bb, c);
      if (ys == 0) break;
    }
    if (xs == 0) break;
  }
  return res;
}

OracleResult oracle_lin3cut_star(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  check_node(g, s);
  check_node(g, t);
  if (s == t) throw InvalidInput("s and t must differ");
  if (n < 3) throw Infeasible("no middle node available");
  require_nodes(n, b);
  require_space(std::pow(3.0, static_cast<double>(n)), b);
  Arcs arcs(g);
  Deadline clock(b.time_cap_seconds);
  const Mask others = full_mask(n) & ~bit(s) & ~bit(t);
  OracleResult res;
  res.s = s;
  res.t = t;
  for (Mask xs = others;; xs = (xs - 1) & others) {
    Mask a = xs | bit(t);
    Mask rest = others & ~xs;
    for (Mask ys = rest; ys; ys = (ys - 1) & rest) {
      clock.tick();
      Mask bb = a | ys;
      Weight c = arcs.beta(a, bb);
      if (c == kInfinite || (res.feasible && c >= res.value)) continue;
      fill_pair(res, arcs, a, bb, c);
      res.r = lowest(ys);
    }
    if (xs == 0) break;
  }
  return res;
}

// ---------------------------------------------------------------- undirected

namespace {

std::vector<Mask> adjacency(const UndirectedGraph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

/// Component masks of the subgraph on `present`.
std::vector<Mask> component_masks(const std::vector<Mask>& adj, Mask present) {
  std::vector<Mask> comps;
  Mask left = present;
  while (left) {
    Mask c = bit(lowest(left)), frontier = c;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
      next &= present & ~c;
      c |= next;
      frontier = next;
    }
    comps.push_back(c);
    left &= ~c;
  }
  return comps;
}

}  // namespace

OracleResult oracle_node_3cut(const UndirectedGraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  auto adj = adjacency(g);
  const Mask full = full_mask(n);
  return node_search(n, removable(n, costs, {}), costs, b, true, [&](Mask removed) {
    return component_masks(adj, full & ~removed).size() >= 3;
  });
}

OracleResult oracle_node_multiway(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                                  const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  if (terminals.size() < 2) throw InvalidInput("multiway cut needs at least two terminals");
  auto adj = adjacency(g);
  const Mask full = full_mask(n);
  Mask tmask = 0;
  for (NodeId t : terminals) {
    if (t >= n) throw InvalidInput("terminal out of range");
    tmask |= bit(t);
  }
  std::vector<NodeId> free;
  for (NodeId v : removable(n, costs, {}))
    if (!(tmask >> v & 1)) free.push_back(v);
  return node_search(n, free, costs, b, true, [&](Mask removed) {
    for (Mask c : component_masks(adj, full & ~removed))
      if (std::popcount(c & tmask) > 1) return false;
    return true;
  });
}

OracleResult oracle_st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n) throw InvalidInput("terminal out of range");
  if (s == t) throw InvalidInput("terminals must differ");
  if (k < 2 || static_cast<std::size_t>(k) > n) throw InvalidInput("k must lie in [2, n]");
  require_nodes(n, b);
  require_space(std::pow(static_cast<double>(k), static_cast<double>(n)), b);
  Deadline clock(b.time_cap_seconds);
  OracleResult res;
  res.s = s;
  res.t = t;
  std::vector<int> lab(n, 0);
  auto rec = [&](auto& self, std::size_t i, int used) -> void {
    if (i == n) {
      clock.tick();
      if (used != k || lab[s] == lab[t]) return;
      Weight c = partition_value(g, lab);
      if (c == kInfinite || (res.feasible && c >= res.value)) return;
      res.feasible = true;
      res.value = c;
      res.partition = lab;
      return;
    }
    if (static_cast<std::size_t>(k - used) > n - i) return;
    for (int blk = 0; blk < std::min(used + 1, k); ++blk) {
      lab[i] = blk;
      self(self, i + 1, std::max(used, blk + 1));
    }
  };
  rec(rec, 0, 0);
  if (res.feasible)
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (res.partition[g.edges()[e].u] != res.partition[g.edges()[e].v]) res.arcs.push_back(static_cast<ArcId>(e));
  return res;
}

OracleResult oracle_vertex_cover(const UndirectedGraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  return node_search(n, removable(n, costs, {}), costs, b, true, [&](Mask chosen) {
    for (const Edge& e : g.edges())
      if (!(chosen >> e.u & 1) && !(chosen >> e.v & 1)) return false;
    return true;
  });
}

// ---------------------------------------------------------------- raw

namespace raw {

namespace {

std::vector<Weight> arc_weights(const WeightedDigraph& g) {
  std::vector<Weight> w;
  for (const Arc& a : g.arcs()) w.push_back(a.weight);
  return w;
}

template <class Check>
OracleResult digraph_arc_search(const WeightedDigraph& g, const OracleBudget& b, Check&& check) {
  if (g.node_count() > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  Arcs arcs(g);
  const Mask full = full_mask(g.node_count());
  return arc_search(arc_weights(g), b, [&](const std::vector<char>& removed) {
    return check(closure(out_masks(arcs, &removed, full), full), full);
  });
}

template <class Check>
OracleResult digraph_node_search(const WeightedDigraph& g, const std::vector<NodeId>& free,
                                 const std::vector<Weight>& costs, const OracleBudget& b, Check&& check) {
  Arcs arcs(g);
  const Mask full = full_mask(g.node_count());
  return node_search(g.node_count(), free, costs, b, false, [&](Mask removed) {
    Mask present = full & ~removed;
    return check(closure(out_masks(arcs, nullptr, present), present), present);
  });
}

}  // namespace

OracleResult edge_double_cut(const WeightedDigraph& g, const OracleBudget& b) {
  return digraph_arc_search(g, b, [](const auto& reach, Mask present) {
    return some_pair_without_common_ancestor(reach, present);
  });
}

OracleResult st_edge_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  check_node(g, s);
  check_node(g, t);
  OracleResult r = digraph_arc_search(g, b, [&](const auto& reach, Mask present) {
    return st_double_cut_ok(reach, present, s, t);
  });
  r.s = s;
  r.t = t;
  return r;
}

OracleResult node_double_cut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  return digraph_node_search(g, removable(g.node_count(), costs, {}), costs, b, [](const auto& reach, Mask present) {
    return some_pair_without_common_ancestor(reach, present);
  });
}

OracleResult st_node_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                const OracleBudget& b) {
  check_node(g, s);
  check_node(g, t);
  OracleResult r = digraph_node_search(g, removable(g.node_count(), costs, {s, t}), costs, b,
                                       [&](const auto& reach, Mask present) {
                                         return st_double_cut_ok(reach, present, s, t);
                                       });
  r.s = s;
  r.t = t;
  return r;
}

OracleResult edge_bicut(const WeightedDigraph& g, const OracleBudget& b) {
  return digraph_arc_search(g, b, [](const auto& reach, Mask present) {
    return some_pair_mutually_unreachable(reach, present);
  });
}

OracleResult st_edge_bicut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  check_node(g, s);
  check_node(g, t);
  OracleResult r = digraph_arc_search(g, b, [&](const auto& reach, Mask) {
    return !(reach[s] >> t & 1) && !(reach[t] >> s & 1);
  });
  r.s = s;
  r.t = t;
  return r;
}

OracleResult node_bicut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  return digraph_node_search(g, removable(g.node_count(), costs, {}), costs, b, [](const auto& reach, Mask present) {
    return some_pair_mutually_unreachable(reach, present);
  });
}

OracleResult s_star_edge_bicut(const WeightedDigraph& g, NodeId s, const OracleBudget& b) {
  check_node(g, s);
  const std::size_t n = g.node_count();
  OracleResult r = digraph_arc_search(g, b, [&](const auto& reach, Mask) {
    for (NodeId t = 0; t < n; ++t)
      if (t != s && !(reach[s] >> t & 1) && !(reach[t] >> s & 1)) return true;
    return false;
  });
  r.s = s;
  return r;
}

OracleResult lin3cut_fixed(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t, const OracleBudget& b) {
  check_node(g, s);
  check_node(g, r);
  check_node(g, t);
  OracleResult res = digraph_arc_search(g, b, [&](const auto& reach, Mask) {
    return !(reach[s] >> r & 1) && !(reach[r] >> t & 1) && !(reach[s] >> t & 1);
  });
  res.s = s;
  res.r = r;
  res.t = t;
  return res;
}

OracleResult lin3cut_star(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b) {
  check_node(g, s);
  check_node(g, t);
  const std::size_t n = g.node_count();
  OracleResult res = digraph_arc_search(g, b, [&](const auto& reach, Mask) {
    if (reach[s] >> t & 1) return false;
    for (NodeId r = 0; r < n; ++r)
      if (r != s && r != t && !(reach[s] >> r & 1) && !(reach[r] >> t & 1)) return true;
    return false;
  });
  res.s = s;
  res.t = t;
  return res;
}

OracleResult node_3cut(const UndirectedGraph& g, const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  return node_search(n, removable(n, costs, {}), costs, b, false, [&](Mask removed) {
    return component_count(g, to_set(n, removed)) >= 3;
  });
}

OracleResult node_multiway(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                           const std::vector<Weight>& costs, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (n > 30) throw BudgetExceeded("oracle refuses more than 30 nodes");
  std::vector<NodeId> free;
  for (NodeId v : removable(n, costs, {}))
    if (std::find(terminals.begin(), terminals.end(), v) == terminals.end()) free.push_back(v);
  return node_search(n, free, costs, b, false, [&](Mask removed) {
    auto comp = components(g, to_set(n, removed));
    for (std::size_t i = 0; i < terminals.size(); ++i)
      for (std::size_t j = i + 1; j < terminals.size(); ++j)
        if (comp[terminals[i]] == comp[terminals[j]]) return false;
    return true;
  });
}

OracleResult st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const OracleBudget& b) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n || s == t) throw InvalidInput("bad terminals");
  std::vector<Weight> w;
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  OracleResult res = arc_search(w, b, [&](const std::vector<char>& removed) {
    std::vector<Edge> kept;
    for (std::size_t e = 0; e < removed.size(); ++e)
      if (!removed[e]) kept.push_back(g.edges()[e]);
    UndirectedGraph h(n, std::move(kept));
    auto comp = components(h, NodeSet(n));
    int count = *std::max_element(comp.begin(), comp.end()) + 1;
    return count >= k && comp[s] != comp[t];
  });
  res.s = s;
  res.t = t;
  return res;
}

}  // namespace raw

}  // namespace cutkit

#include "cutkit/graph.hpp"

#include <algorithm>
#include <deque>

#include "cutkit/error.hpp"

namespace cutkit {

namespace {

void check_node_weights(std::size_t n, const std::vector<Weight>& w) {
  if (!w.empty() && w.size() != n) throw InvalidInput("node weight vector has wrong length");
}

void check_labels(std::size_t n, const std::vector<std::string>& l) {
  if (!l.empty() && l.size() != n) throw InvalidInput("label vector has wrong length");
}

void check_terminals(std::size_t n, const TerminalMap& t) {
  for (const auto& [name, id] : t)
    if (id >= n) throw InvalidInput("terminal '" + name + "' out of range");
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<Arc> arcs, std::vector<Weight> node_weights,
                                 std::vector<std::string> labels, TerminalMap terminals)
    : n_(n),
      arcs_(std::move(arcs)),
      node_weights_(std::move(node_weights)),
      labels_(std::move(labels)),
      terminals_(std::move(terminals)),
      out_(n),
      in_(n) {
  check_node_weights(n_, node_weights_);
  check_labels(n_, labels_);
  check_terminals(n_, terminals_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail >= n_ || a.head >= n_) throw InvalidInput("arc endpoint out of range");
    if (a.tail == a.head) throw InvalidInput("self-loop at node " + std::to_string(a.tail + 1));
    out_[a.tail].push_back(static_cast<ArcId>(i));
    in_[a.head].push_back(static_cast<ArcId>(i));
  }
}

std::string WeightedDigraph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

std::optional<NodeId> WeightedDigraph::terminal(const std::string& name) const {
  auto it = terminals_.find(name);
  if (it == terminals_.end()) return std::nullopt;
  return it->second;
}

Weight WeightedDigraph::total_finite_weight() const {
  Weight total = 0;
  for (const Arc& a : arcs_)
    if (a.weight != kInfinite) total = add_weight(total, a.weight);
  return total;
}

bool WeightedDigraph::has_arc_between(NodeId u, NodeId v) const {
  for (ArcId a : out_[u])
    if (arcs_[a].head == v) return true;
  for (ArcId a : out_[v])
    if (arcs_[a].head == u) return true;
  return false;
}

WeightedDigraph WeightedDigraph::reversed() const {
  std::vector<Arc> r;
  r.reserve(arcs_.size());
  for (const Arc& a : arcs_) r.push_back({a.head, a.tail, a.weight});
  return WeightedDigraph(n_, std::move(r), node_weights_, labels_, terminals_);
}

WeightedDigraph WeightedDigraph::with_node_weights(std::vector<Weight> w) const {
  return WeightedDigraph(n_, arcs_, std::move(w), labels_, terminals_);
}

WeightedDigraph WeightedDigraph::with_terminals(TerminalMap t) const {
  return WeightedDigraph(n_, arcs_, node_weights_, labels_, std::move(t));
}

WeightedDigraph WeightedDigraph::reweighted(const std::function<Weight(ArcId, const Arc&)>& f) const {
  std::vector<Arc> r = arcs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i].weight = f(static_cast<ArcId>(i), arcs_[i]);
  return WeightedDigraph(n_, std::move(r), node_weights_, labels_, terminals_);
}

bool WeightedDigraph::operator==(const WeightedDigraph& o) const {
  return n_ == o.n_ && arcs_ == o.arcs_ && node_weights_ == o.node_weights_ && labels_ == o.labels_ &&
         terminals_ == o.terminals_;
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Weight> node_weights,
                                 std::vector<std::string> labels, TerminalMap terminals)
    : n_(n),
      edges_(std::move(edges)),
      node_weights_(std::move(node_weights)),
      labels_(std::move(labels)),
      terminals_(std::move(terminals)),
      inc_(n) {
  check_node_weights(n_, node_weights_);
  check_labels(n_, labels_);
  check_terminals(n_, terminals_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) throw InvalidInput("edge endpoint out of range");
    if (e.u == e.v) throw InvalidInput("self-loop at node " + std::to_string(e.u + 1));
    inc_[e.u].push_back(static_cast<ArcId>(i));
    inc_[e.v].push_back(static_cast<ArcId>(i));
  }
}

std::string UndirectedGraph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

std::optional<NodeId> UndirectedGraph::terminal(const std::string& name) const {
  auto it = terminals_.find(name);
  if (it == terminals_.end()) return std::nullopt;
  return it->second;
}

bool UndirectedGraph::adjacent(NodeId u, NodeId v) const {
  for (ArcId e : inc_[u])
    if (other(e, u) == v) return true;
  return false;
}

bool UndirectedGraph::is_regular(std::size_t k) const {
  for (std::size_t v = 0; v < n_; ++v) {
    std::vector<NodeId> nb;
    for (ArcId e : inc_[v]) nb.push_back(other(e, static_cast<NodeId>(v)));
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    if (nb.size() != k) return false;
  }
  return true;
}

WeightedDigraph UndirectedGraph::bidirected() const {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    arcs.push_back({e.u, e.v, e.weight});
    arcs.push_back({e.v, e.u, e.weight});
  }
  return WeightedDigraph(n_, std::move(arcs), node_weights_, labels_, terminals_);
}

UndirectedGraph UndirectedGraph::with_node_weights(std::vector<Weight> w) const {
  return UndirectedGraph(n_, edges_, std::move(w), labels_, terminals_);
}

UndirectedGraph UndirectedGraph::with_terminals(TerminalMap t) const {
  return UndirectedGraph(n_, edges_, node_weights_, labels_, std::move(t));
}

bool UndirectedGraph::operator==(const UndirectedGraph& o) const {
  return n_ == o.n_ && edges_ == o.edges_ && node_weights_ == o.node_weights_ && labels_ == o.labels_ &&
         terminals_ == o.terminals_;
}

InCut in_cut(const WeightedDigraph& g, const NodeSet& x) {
  InCut r;
  const auto& arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (x.contains(arcs[i].head) && !x.contains(arcs[i].tail)) {
      r.arcs.push_back(static_cast<ArcId>(i));
      r.weight = add_weight(r.weight, arcs[i].weight);
    }
  }
  return r;
}

Weight in_degree(const WeightedDigraph& g, const NodeSet& x) {
  Weight w = 0;
  for (const Arc& a : g.arcs())
    if (x.contains(a.head) && !x.contains(a.tail)) w = add_weight(w, a.weight);
  return w;
}

Weight out_degree(const WeightedDigraph& g, const NodeSet& x) {
  Weight w = 0;
  for (const Arc& a : g.arcs())
    if (x.contains(a.tail) && !x.contains(a.head)) w = add_weight(w, a.weight);
  return w;
}

Weight arcs_between(const WeightedDigraph& g, const NodeSet& x, const NodeSet& y) {
  Weight w = 0;
  for (const Arc& a : g.arcs())
    if (x.contains(a.tail) && y.contains(a.head)) w = add_weight(w, a.weight);
  return w;
}

CutPair beta_sigma(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b) {
  CutPair p{a, b, 0, 0};
  for (const Arc& arc : g.arcs()) {
    bool ia = a.contains(arc.head) && !a.contains(arc.tail);
    bool ib = b.contains(arc.head) && !b.contains(arc.tail);
    if (ia || ib) p.beta = add_weight(p.beta, arc.weight);
    if (ia) p.sigma = add_weight(p.sigma, arc.weight);
    if (ib) p.sigma = add_weight(p.sigma, arc.weight);
  }
  return p;
}

std::vector<ArcId> union_in_cut(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b) {
  std::vector<ArcId> out;
  const auto& arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    bool ia = a.contains(arcs[i].head) && !a.contains(arcs[i].tail);
    bool ib = b.contains(arcs[i].head) && !b.contains(arcs[i].tail);
    if (ia || ib) out.push_back(static_cast<ArcId>(i));
  }
  return out;
}

Weight arc_set_weight(const WeightedDigraph& g, const std::vector<ArcId>& arcs) {
  Weight w = 0;
  for (ArcId a : arcs) w = add_weight(w, g.arc(a).weight);
  return w;
}

bool uncomparable(const NodeSet& a, const NodeSet& b) { return !a.subset_of(b) && !b.subset_of(a); }

NodeSet reach(const WeightedDigraph& g, const NodeSet& sources) {
  NodeSet seen = sources;
  std::vector<NodeId> stack = sources.members();
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      NodeId h = g.arc(a).head;
      if (!seen.contains(h)) {
        seen.insert(h);
        stack.push_back(h);
      }
    }
  }
  return seen;
}

NodeSet reach_to(const WeightedDigraph& g, const NodeSet& targets) {
  NodeSet seen = targets;
  std::vector<NodeId> stack = targets.members();
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.in_arcs(v)) {
      NodeId t = g.arc(a).tail;
      if (!seen.contains(t)) {
        seen.insert(t);
        stack.push_back(t);
      }
    }
  }
  return seen;
}

WeightedDigraph remove_arcs(const WeightedDigraph& g, const std::vector<ArcId>& arcs) {
  std::vector<char> drop(g.arc_count(), 0);
  for (ArcId a : arcs) {
    if (a >= g.arc_count()) throw InvalidInput("arc id out of range");
    drop[a] = 1;
  }
  std::vector<Arc> keep;
  for (std::size_t i = 0; i < g.arc_count(); ++i)
    if (!drop[i]) keep.push_back(g.arcs()[i]);
  return WeightedDigraph(g.node_count(), std::move(keep), g.node_weights(), g.labels(), g.terminals());
}

WeightedDigraph remove_nodes(const WeightedDigraph& g, const NodeSet& nodes) {
  std::vector<Arc> keep;
  for (const Arc& a : g.arcs())
    if (!nodes.contains(a.tail) && !nodes.contains(a.head)) keep.push_back(a);
  return WeightedDigraph(g.node_count(), std::move(keep), g.node_weights(), g.labels(), g.terminals());
}

Contraction contract(const WeightedDigraph& g, const std::vector<NodeSet>& groups, const ArcDropPredicate& drop) {
  const std::size_t n = g.node_count();
  std::vector<int> group_of(n, -1);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    groups[gi].for_each([&](NodeId v) {
      if (v >= n) throw InvalidInput("contraction group out of range");
      if (group_of[v] != -1) throw InvalidInput("contraction groups overlap");
      group_of[v] = static_cast<int>(gi);
    });
  }
  Contraction c;
  c.node_map.assign(n, 0);
  std::vector<int> group_new(groups.size(), -1);
  NodeId next = 0;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    int gi = group_of[v];
    if (gi < 0) {
      c.node_map[v] = next++;
      labels.push_back(g.label(static_cast<NodeId>(v)));
    } else if (group_new[gi] < 0) {
      group_new[gi] = static_cast<int>(next);
      c.node_map[v] = next++;
      labels.push_back("{" + g.label(static_cast<NodeId>(v)) + "...}");
    } else {
      c.node_map[v] = static_cast<NodeId>(group_new[gi]);
    }
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arcs()[i];
    NodeId t = c.node_map[a.tail], h = c.node_map[a.head];
    if (t == h) continue;
    if (drop && drop(t, h, a)) continue;
    arcs.push_back({t, h, a.weight});
    c.arc_origin.push_back(static_cast<ArcId>(i));
  }
  c.graph = WeightedDigraph(next, std::move(arcs), {}, std::move(labels));
  return c;
}

NodeSet uncontract(const Contraction& c, const NodeSet& contracted, std::size_t original_n) {
  NodeSet out(original_n);
  for (std::size_t v = 0; v < original_n; ++v)
    if (contracted.contains(c.node_map[v])) out.insert(static_cast<NodeId>(v));
  return out;
}

Induced induced_subgraph(const WeightedDigraph& g, const NodeSet& keep) {
  Induced r;
  std::vector<int> sub(g.node_count(), -1);
  keep.for_each([&](NodeId v) {
    sub[v] = static_cast<int>(r.to_parent.size());
    r.to_parent.push_back(v);
  });
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs())
    if (sub[a.tail] >= 0 && sub[a.head] >= 0)
      arcs.push_back({static_cast<NodeId>(sub[a.tail]), static_cast<NodeId>(sub[a.head]), a.weight});
  std::vector<Weight> nw;
  std::vector<std::string> labels;
  for (NodeId p : r.to_parent) {
    if (g.has_node_weights()) nw.push_back(g.node_weight(p));
    labels.push_back(g.label(p));
  }
  r.graph = WeightedDigraph(r.to_parent.size(), std::move(arcs), std::move(nw), std::move(labels));
  return r;
}

InducedUndirected induced_subgraph(const UndirectedGraph& g, const NodeSet& keep) {
  InducedUndirected r;
  std::vector<int> sub(g.node_count(), -1);
  keep.for_each([&](NodeId v) {
    sub[v] = static_cast<int>(r.to_parent.size());
    r.to_parent.push_back(v);
  });
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (sub[e.u] >= 0 && sub[e.v] >= 0)
      edges.push_back({static_cast<NodeId>(sub[e.u]), static_cast<NodeId>(sub[e.v]), e.weight});
  std::vector<Weight> nw;
  for (NodeId p : r.to_parent)
    if (g.has_node_weights()) nw.push_back(g.node_weight(p));
  r.graph = UndirectedGraph(r.to_parent.size(), std::move(edges), std::move(nw));
  return r;
}

NodeSet lift(const std::vector<NodeId>& to_parent, const NodeSet& sub, std::size_t parent_n) {
  NodeSet out(parent_n);
  sub.for_each([&](NodeId v) { out.insert(to_parent[v]); });
  return out;
}

std::vector<int> components(const UndirectedGraph& g, const NodeSet& removed) {
  const std::size_t n = g.node_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::deque<NodeId> q;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0 || removed.contains(static_cast<NodeId>(s))) continue;
    comp[s] = next;
    q.push_back(static_cast<NodeId>(s));
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop_front();
      for (ArcId e : g.incident(v)) {
        NodeId w = g.other(e, v);
        if (comp[w] < 0 && !removed.contains(w)) {
          comp[w] = next;
          q.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const UndirectedGraph& g, const NodeSet& removed) {
  auto c = components(g, removed);
  int m = -1;
  for (int x : c) m = std::max(m, x);
  return m + 1;
}

Weight partition_value(const UndirectedGraph& g, const std::vector<int>& block_of) {
  Weight w = 0;
  for (const Edge& e : g.edges())
    if (block_of[e.u] != block_of[e.v]) w = add_weight(w, e.weight);
  return w;
}

}  // namespace cutkit

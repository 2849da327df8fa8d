#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutkit/node_set.hpp"

namespace cutkit {

using Weight = std::uint64_t;
using ArcId = std::uint32_t;

inline constexpr Weight kInfinite = std::numeric_limits<Weight>::max();

/// Saturating addition; anything involving kInfinite stays infinite.
inline Weight add_weight(Weight a, Weight b) {
  if (a == kInfinite || b == kInfinite) return kInfinite;
  Weight s = a + b;
  return (s < a || s == kInfinite) ? kInfinite : s;
}

inline Weight mul_weight(Weight a, Weight k) {
  if (a == kInfinite) return kInfinite;
  if (k != 0 && a > (kInfinite - 1) / k) return kInfinite;
  return a * k;
}

struct Arc {
  NodeId tail;
  NodeId head;
  Weight weight;
  bool operator==(const Arc&) const = default;
};

struct Edge {
  NodeId u;
  NodeId v;
  Weight weight;
  bool operator==(const Edge&) const = default;
};

using TerminalMap = std::map<std::string, NodeId>;

/// Directed multigraph with integer arc weights. Immutable once built.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(std::size_t n, std::vector<Arc> arcs, std::vector<Weight> node_weights = {},
                  std::vector<std::string> labels = {}, TerminalMap terminals = {});

  std::size_t node_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<ArcId>& out_arcs(NodeId v) const { return out_[v]; }
  const std::vector<ArcId>& in_arcs(NodeId v) const { return in_[v]; }

  bool has_node_weights() const { return !node_weights_.empty(); }
  const std::vector<Weight>& node_weights() const { return node_weights_; }
  /// Defaults to 1 when no node weights were given.
  Weight node_weight(NodeId v) const { return node_weights_.empty() ? 1 : node_weights_[v]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(NodeId v) const;
  const TerminalMap& terminals() const { return terminals_; }
  std::optional<NodeId> terminal(const std::string& name) const;

  Weight total_finite_weight() const;
  bool has_arc_between(NodeId u, NodeId v) const;

  WeightedDigraph reversed() const;
  WeightedDigraph with_node_weights(std::vector<Weight> w) const;
  WeightedDigraph with_terminals(TerminalMap t) const;
  /// Same arcs with each weight replaced by f(arc id, arc).
  WeightedDigraph reweighted(const std::function<Weight(ArcId, const Arc&)>& f) const;

  bool operator==(const WeightedDigraph& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Weight> node_weights_;
  std::vector<std::string> labels_;
  TerminalMap terminals_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

/// Undirected multigraph with integer edge weights. Immutable once built.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Weight> node_weights = {},
                  std::vector<std::string> labels = {}, TerminalMap terminals = {});

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<ArcId>& incident(NodeId v) const { return inc_[v]; }
  NodeId other(ArcId e, NodeId v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  bool has_node_weights() const { return !node_weights_.empty(); }
  const std::vector<Weight>& node_weights() const { return node_weights_; }
  Weight node_weight(NodeId v) const { return node_weights_.empty() ? 1 : node_weights_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(NodeId v) const;
  const TerminalMap& terminals() const { return terminals_; }
  std::optional<NodeId> terminal(const std::string& name) const;

  bool adjacent(NodeId u, NodeId v) const;
  bool is_regular(std::size_t k) const;
  /// Each edge becomes a pair of opposite arcs with the same weight.
  WeightedDigraph bidirected() const;
  UndirectedGraph with_node_weights(std::vector<Weight> w) const;
  UndirectedGraph with_terminals(TerminalMap t) const;

  bool operator==(const UndirectedGraph& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Weight> node_weights_;
  std::vector<std::string> labels_;
  TerminalMap terminals_;
  std::vector<std::vector<ArcId>> inc_;
};

struct InCut {
  std::vector<ArcId> arcs;
  Weight weight = 0;
};

struct CutPair {
  NodeSet a;
  NodeSet b;
  Weight beta = 0;
  Weight sigma = 0;
};

InCut in_cut(const WeightedDigraph& g, const NodeSet& x);
Weight in_degree(const WeightedDigraph& g, const NodeSet& x);
Weight out_degree(const WeightedDigraph& g, const NodeSet& x);
/// d(X,Y): weight of arcs with tail in x and head in y.
Weight arcs_between(const WeightedDigraph& g, const NodeSet& x, const NodeSet& y);
CutPair beta_sigma(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b);
/// Sorted, duplicate-free union of in_cut(a) and in_cut(b).
std::vector<ArcId> union_in_cut(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b);
Weight arc_set_weight(const WeightedDigraph& g, const std::vector<ArcId>& arcs);
bool uncomparable(const NodeSet& a, const NodeSet& b);

NodeSet reach(const WeightedDigraph& g, const NodeSet& sources);
/// Nodes from which some target is reachable.
NodeSet reach_to(const WeightedDigraph& g, const NodeSet& targets);

/// Arc ids listed in `arcs` are dropped; node ids are unchanged.
WeightedDigraph remove_arcs(const WeightedDigraph& g, const std::vector<ArcId>& arcs);
/// Arcs touching `nodes` are dropped; node ids are unchanged (removed nodes become isolated).
WeightedDigraph remove_nodes(const WeightedDigraph& g, const NodeSet& nodes);

struct Contraction {
  WeightedDigraph graph;
  std::vector<NodeId> node_map;  // old id -> new id
  std::vector<ArcId> arc_origin; // new arc id -> old arc id
};

using ArcDropPredicate = std::function<bool(NodeId new_tail, NodeId new_head, const Arc& original)>;

/// Groups become single nodes (numbered by first occurrence in id order);
/// arcs inside a group and arcs accepted by `drop` are removed.
Contraction contract(const WeightedDigraph& g, const std::vector<NodeSet>& groups,
                     const ArcDropPredicate& drop = nullptr);
/// Pulls a set of contracted node ids back to original ids.
NodeSet uncontract(const Contraction& c, const NodeSet& contracted, std::size_t original_n);

struct Induced {
  WeightedDigraph graph;
  std::vector<NodeId> to_parent;  // sub id -> parent id
};
Induced induced_subgraph(const WeightedDigraph& g, const NodeSet& keep);

struct InducedUndirected {
  UndirectedGraph graph;
  std::vector<NodeId> to_parent;
};
InducedUndirected induced_subgraph(const UndirectedGraph& g, const NodeSet& keep);

/// Lifts a set of sub ids to parent ids.
NodeSet lift(const std::vector<NodeId>& to_parent, const NodeSet& sub, std::size_t parent_n);

/// Component label per node of g with `removed` nodes skipped (label -1 for removed).
std::vector<int> components(const UndirectedGraph& g, const NodeSet& removed);
int component_count(const UndirectedGraph& g, const NodeSet& removed);

/// Weight of edges whose endpoints carry different labels.
Weight partition_value(const UndirectedGraph& g, const std::vector<int>& block_of);

}  // namespace cutkit

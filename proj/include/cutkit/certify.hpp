#pragma once

#include <string>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

/// Outcome of an independent feasibility recheck. Checkers only use reachability
/// and component counting on the instance itself, never solver internals.
struct Certificate {
  bool ok = false;
  std::string reason;
};

Certificate certify_st_edge_double_cut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s, NodeId t);
Certificate certify_st_node_double_cut(const WeightedDigraph& g, const NodeSet& removed, NodeId s, NodeId t);
/// No arborescence remains: at least two source strongly connected components.
Certificate certify_double_cut(const WeightedDigraph& g, const std::vector<ArcId>& removed_arcs,
                               const NodeSet& removed_nodes);
Certificate certify_st_bicut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s, NodeId t);
Certificate certify_node_bicut(const WeightedDigraph& g, const NodeSet& removed, NodeId s, NodeId t);
/// Pair is uncomparable and, after removal, A∖B and B∖A cannot reach each other.
Certificate certify_bicut_pair(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b,
                               const std::vector<ArcId>& removed);
Certificate certify_lin3cut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s, NodeId r, NodeId t);
Certificate certify_node_multiway(const UndirectedGraph& g, const NodeSet& removed, const std::vector<NodeId>& terminals);
Certificate certify_node_3cut(const UndirectedGraph& g, const NodeSet& removed);
Certificate certify_sep_kcut(const UndirectedGraph& g, const std::vector<int>& block_of, NodeId s, NodeId t, int k,
                             Weight claimed);

}  // namespace cutkit

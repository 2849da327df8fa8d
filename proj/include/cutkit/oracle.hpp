#pragma once

#include <cstdint>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

/// Limits an exhaustive run; exceeding any of them throws BudgetExceeded.
/// For node-removal problems max_nodes bounds the removable (finite-cost) nodes.
struct OracleBudget {
  std::size_t max_nodes = 10;
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
  double time_cap_seconds = 600.0;
};

struct OracleResult {
  bool feasible = false;
  Weight value = kInfinite;
  std::vector<ArcId> arcs;  // removed arcs / edges (edge problems)
  NodeSet nodes;            // removed nodes (node problems)
  NodeSet a;                // witness sets where the problem has them
  NodeSet b;
  NodeId s = 0;
  NodeId t = 0;
  NodeId r = 0;
  std::vector<int> partition;  // st_sep_kcut block labels
};

// Structural oracles: enumerate set pairs, nested pairs, partitions, or node
// subsets in increasing cost.
OracleResult oracle_edge_double_cut(const WeightedDigraph& g, const OracleBudget& b = {});
OracleResult oracle_st_edge_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult oracle_node_double_cut(const WeightedDigraph& g, const std::vector<Weight>& costs,
                                    const OracleBudget& b = {});
OracleResult oracle_st_node_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                       const OracleBudget& b = {});
OracleResult oracle_edge_bicut(const WeightedDigraph& g, const OracleBudget& b = {});
OracleResult oracle_st_edge_bicut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult oracle_node_bicut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult oracle_s_star_edge_bicut(const WeightedDigraph& g, NodeId s, const OracleBudget& b = {});
OracleResult oracle_lin3cut_fixed(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t, const OracleBudget& b = {});
OracleResult oracle_lin3cut_star(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult oracle_node_3cut(const UndirectedGraph& g, const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult oracle_node_multiway(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                                  const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult oracle_st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const OracleBudget& b = {});

// Restricted bicut oracles for the exact subroutines.
OracleResult oracle_bicut_fixed_intersection(const WeightedDigraph& g, const NodeSet& z, const OracleBudget& b = {});
OracleResult oracle_bicut_fixed_complement(const WeightedDigraph& g, const NodeSet& w, const OracleBudget& b = {});
/// Minimum σ(A,B) = d^in(A) + d^in(B) over uncomparable pairs.
OracleResult oracle_min_uncomparable_sigma(const WeightedDigraph& g, const OracleBudget& b = {});

/// Raw cross-oracles: every subset of finite arcs / edges / removable nodes,
/// checked by reachability or component counting. Tiny instances only.
namespace raw {
OracleResult edge_double_cut(const WeightedDigraph& g, const OracleBudget& b = {});
OracleResult st_edge_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult node_double_cut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult st_node_double_cut(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                const OracleBudget& b = {});
OracleResult edge_bicut(const WeightedDigraph& g, const OracleBudget& b = {});
OracleResult st_edge_bicut(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult node_bicut(const WeightedDigraph& g, const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult s_star_edge_bicut(const WeightedDigraph& g, NodeId s, const OracleBudget& b = {});
OracleResult lin3cut_fixed(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t, const OracleBudget& b = {});
OracleResult lin3cut_star(const WeightedDigraph& g, NodeId s, NodeId t, const OracleBudget& b = {});
OracleResult node_3cut(const UndirectedGraph& g, const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult node_multiway(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                           const std::vector<Weight>& costs, const OracleBudget& b = {});
OracleResult st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const OracleBudget& b = {});
}  // namespace raw

/// Minimum-cost vertex cover by enumeration (gadget checks).
OracleResult oracle_vertex_cover(const UndirectedGraph& g, const std::vector<Weight>& costs,
                                 const OracleBudget& b = {});

}  // namespace cutkit

#pragma once

#include <optional>
#include <vector>

#include "cutkit/graph.hpp"
#include "cutkit/lp.hpp"

namespace cutkit {

struct DoubleCutSolution {
  enum class Kind { edge, node };
  Kind kind = Kind::edge;
  std::vector<ArcId> removed_arcs;
  NodeSet removed_nodes;
  NodeId s = 0;
  NodeId t = 0;
  NodeSet S;  // nodes reaching s after removal
  NodeSet T;  // nodes reaching t after removal
  Weight cost = 0;
  std::optional<double> lp_value;
};

/// Node costs of g (1 when unweighted).
std::vector<Weight> node_costs(const WeightedDigraph& g);

DoubleCutSolution st_edge_double_cut_exact(const WeightedDigraph& g, NodeId s, NodeId t);
DoubleCutSolution edge_double_cut_exact(const WeightedDigraph& g, unsigned threads = 1);

/// Node-weighted shortest distances to x: path cost sums d over all path nodes, endpoints included.
/// next[v] is the successor of v on a shortest v->x path (-1 at x or when unreachable).
std::vector<double> distances_to(const WeightedDigraph& g, NodeId x, const std::vector<double>& d,
                                 std::vector<int>* next = nullptr);

struct PathBlockingLp {
  LpModel model;
  SeparationOracle oracle;
};
PathBlockingLp build_path_blocking_lp(const WeightedDigraph& g, NodeId s, NodeId t, const std::vector<Weight>& costs,
                                      double sep_tol = 1e-7);

struct PathBlockingSolution {
  std::vector<double> d;
  double value = 0.0;
};
PathBlockingSolution solve_path_blocking_lp(const WeightedDigraph& g, NodeId s, NodeId t,
                                            const std::vector<Weight>& costs);

/// Derandomized threshold sweep; returns the cheapest U(θ).
NodeSet round_path_blocking(const WeightedDigraph& g, NodeId s, NodeId t, const PathBlockingSolution& d,
                            const std::vector<Weight>& costs);

DoubleCutSolution st_node_double_cut_2approx(const WeightedDigraph& g, NodeId s, NodeId t,
                                             const std::vector<Weight>& costs);
/// lp_value holds the minimum LP value over the pairs tried.
DoubleCutSolution node_double_cut_2approx(const WeightedDigraph& g, const std::vector<Weight>& costs,
                                          unsigned threads = 1);

Weight node_set_cost(const NodeSet& u, const std::vector<Weight>& costs);

}  // namespace cutkit

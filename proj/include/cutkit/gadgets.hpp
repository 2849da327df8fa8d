#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cutkit/graph.hpp"
#include "cutkit/oracle.hpp"

namespace cutkit {

// ------------------------------------------------------------- D_{a,b}

enum class DabArcKind { terminal, row, jumping };

struct DabInstance {
  int a = 0;
  int b = 0;
  int r = 0;  // b - 2a + 1
  WeightedDigraph graph;  // s = 0, t = 1; internal (i,j) at node(i,j); internal cost 1, s/t infinite
  std::vector<DabArcKind> kinds;  // one tag per arc
  NodeId s() const { return 0; }
  NodeId t() const { return 1; }
  NodeId node(int i, int j) const;  // 1-based row/column; column 0 is s, b+1 is t
};

DabInstance build_dab(int a, int b);
/// 4a + 2a(b-1) + 2(a-1)(b-2): the arc count recomputed from the parameters alone.
std::size_t dab_expected_arc_count(int a, int b);

struct DabReport {
  bool property1 = true;
  std::vector<std::string> violations;
  bool property2_checked = false;
  bool property2 = false;
  Weight min_blocking = kInfinite;  // oracle optimum when checked
  std::string note;
};

DabReport check_dab_properties(const DabInstance& inst, const OracleBudget& budget = {});

/// Fewest internal nodes other than `from` on any path from `from` to `to`.
std::vector<std::size_t> dab_internal_distances(const DabInstance& inst, NodeId to);

/// Runs the path-blocking separation oracle on d = 1/r over internal nodes; true when no row is violated.
bool dab_uniform_solution_feasible(const DabInstance& inst, double tol = 1e-9);

// ------------------------------------------------------------- skeleton

/// The fixed 6-node digraph; node order s, t, a, b, c, d.
WeightedDigraph build_global_skeleton();

struct SkeletonReport {
  bool item1 = false;
  bool item2 = false;
  bool item3 = false;
  std::vector<std::string> details;
  bool ok() const { return item1 && item2 && item3; }
};

SkeletonReport check_skeleton(const WeightedDigraph& d, NodeId s, NodeId t);

// ------------------------------------------------------------- vertex-cover gadgets

enum class GadgetKind { node3cut, node_bicut, s_star_bicut };

struct ReductionMap {
  GadgetKind kind = GadgetKind::node3cut;
  std::size_t source_n = 0;
  std::optional<UndirectedGraph> undirected;  // node3cut target
  std::optional<WeightedDigraph> digraph;     // bicut targets
  std::vector<NodeId> node_of;  // source vertex -> target node (v1 copy for s_star)
  std::vector<ArcId> arc_of;    // s_star only: source vertex -> its vertex arc
  std::vector<NodeId> hubs;     // s1,s2,s3 or s,t
  std::vector<Weight> target_costs;  // node costs of the target (node gadgets)

  /// Source vertices whose target node is in `removed`.
  NodeSet back_from_nodes(const NodeSet& removed) const;
  /// Source vertices whose vertex arc is in `removed`; other arcs are ignored.
  NodeSet back_from_arcs(const std::vector<ArcId>& removed) const;
  NodeSet forward_nodes(const NodeSet& cover) const;
  std::vector<ArcId> forward_arcs(const NodeSet& cover) const;
};

/// Throws InvalidInput unless parts has one label in [0,k) per node and no edge is inside a part.
void validate_partition(const UndirectedGraph& g, const std::vector<int>& parts, int k);

ReductionMap vc3p_to_node3cut(const UndirectedGraph& g, const std::vector<int>& parts);
ReductionMap vc4p_to_node_bicut(const UndirectedGraph& g, const std::vector<int>& parts);
ReductionMap vc3p_to_s_star_bicut(const UndirectedGraph& g, const std::vector<int>& parts);
ReductionMap build_reduction(GadgetKind kind, const UndirectedGraph& g, const std::vector<int>& parts);

struct ReductionCheck {
  Weight source_opt = kInfinite;
  Weight target_opt = kInfinite;
  bool back_feasible = false;    // optimal target solution mapped back is a cover
  Weight back_cost = kInfinite;
  bool forward_feasible = false; // optimal cover mapped forward is feasible in the target
  Weight forward_cost = kInfinite;
  bool ok() const {
    return source_opt == target_opt && back_feasible && back_cost == target_opt && forward_feasible &&
           forward_cost == source_opt;
  }
};

/// Both optima by brute force plus the two solution maps.
ReductionCheck verify_reduction(const UndirectedGraph& g, const ReductionMap& map, const OracleBudget& budget = {});

bool is_vertex_cover(const UndirectedGraph& g, const NodeSet& cover);

/// Target-side feasibility used by verify_reduction.
bool target_feasible(const ReductionMap& map, const NodeSet& removed_nodes, const std::vector<ArcId>& removed_arcs);

// ------------------------------------------------------------- Node-3-Cut via double cut

using NodeDoubleCutSolver = std::function<NodeSet(const WeightedDigraph&, const std::vector<Weight>&)>;

struct Node3CutResult {
  NodeSet removed;
  Weight cost = kInfinite;
  NodeId s = 0;
  int components = 0;
};

/// The digraph built for hub s: every edge bidirected, an arc v -> s for each v != s.
WeightedDigraph node3cut_doublecut_instance(const UndirectedGraph& g, NodeId s);

Node3CutResult node3cut_via_doublecut(const UndirectedGraph& g, const std::vector<Weight>& costs,
                                      const NodeDoubleCutSolver& solver);

// ------------------------------------------------------------- Brooks colouring

/// Proper k-colouring of a k-regular graph other than K_{k+1}; labels in [0,k).
std::vector<int> kregular_partition(const UndirectedGraph& g, int k, std::uint64_t seed = 1);

bool is_proper_coloring(const UndirectedGraph& g, const std::vector<int>& colors, int k);

}  // namespace cutkit

#pragma once

#include <cstdint>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

struct CutResult {
  Weight value = 0;  // kInfinite when no finite cut exists
  NodeSet min_sink_side;
  NodeSet max_sink_side;
  std::vector<ArcId> cut_arcs;  // arcs entering min_sink_side
  bool finite() const { return value != kInfinite; }
};

/// Reusable Dinic max-flow over a fixed digraph; terminals vary per call.
class FlowSolver {
 public:
  explicit FlowSolver(const WeightedDigraph& g);
  CutResult solve(const NodeSet& sources, const NodeSet& sinks);

 private:
  bool bfs(const std::vector<char>& is_source, const std::vector<char>& is_sink);
  std::int64_t dfs(std::uint32_t v, std::int64_t pushed, const std::vector<char>& is_sink);

  const WeightedDigraph* g_;
  std::size_t n_;
  std::int64_t big_;
  std::vector<std::uint32_t> start_;  // CSR offsets per node
  std::vector<std::uint32_t> to_;
  std::vector<std::uint32_t> rev_;
  std::vector<std::int64_t> cap0_;
  std::vector<std::int64_t> cap_;
  std::vector<int> level_;
  std::vector<std::uint32_t> it_;
};

/// Minimum d^in(X) over sink sides X with sinks ⊆ X and X ∩ sources = ∅.
CutResult min_cut(const WeightedDigraph& g, const NodeSet& sources, const NodeSet& sinks);
/// Minimum d^in(Y) over force_in ⊆ Y ⊆ V∖force_out.
CutResult constrained_min_cut(const WeightedDigraph& g, const NodeSet& force_in, const NodeSet& force_out);
CutResult undirected_min_cut(const UndirectedGraph& g, NodeId s, NodeId t);

}  // namespace cutkit

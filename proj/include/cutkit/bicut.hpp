#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

struct BicutSolution {
  CutPair pair;
  std::vector<ArcId> removed_arcs;
  Weight cost = kInfinite;  // kInfinite when nothing finite was found
  std::string method;
  std::vector<NodeId> tuple;  // (x, y, w1, w2, z1, z2) for tuple-loop candidates
  std::size_t tuples_evaluated = 0;
  std::size_t tuples_total = 0;
  bool found() const { return cost != kInfinite; }
};

struct NodeBicutSolution {
  NodeSet removed;
  NodeId s = 0;
  NodeId t = 0;
  Weight cost = kInfinite;
};

BicutSolution st_edge_bicut_2approx(const WeightedDigraph& g, NodeId s, NodeId t);
NodeBicutSolution node_bicut_2approx(const WeightedDigraph& g, const std::vector<Weight>& costs, unsigned threads = 1);
BicutSolution s_star_edge_bicut_2approx(const WeightedDigraph& g, NodeId s);

/// Uncomparable pair minimizing σ; nullopt when every candidate cut is infinite.
std::optional<CutPair> min_uncomparable_pair(const WeightedDigraph& g);

BicutSolution bicut_fixed_intersection(const WeightedDigraph& g, const NodeSet& z);
BicutSolution bicut_fixed_complement(const WeightedDigraph& g, const NodeSet& w);

struct GlobalBicutOptions {
  unsigned threads = 1;
  std::optional<std::size_t> tuple_limit;  // sample this many 6-tuples instead of all
  std::uint64_t seed = 1;
};

BicutSolution approximate_global_bicut(const WeightedDigraph& g, const GlobalBicutOptions& opt = {});

/// α1..α6 for sets X', Y', Z' of the tuple loop and the intersection Z / outside W of a reference pair.
std::array<Weight, 6> bicut_alpha_diagnostics(const WeightedDigraph& g, const NodeSet& x, const NodeSet& y,
                                              const NodeSet& z_prime, const NodeSet& z, const NodeSet& w);

/// Decodes index k of the ordered 6-tuples of distinct nodes out of n, in lexicographic order.
std::array<NodeId, 6> decode_tuple(std::size_t n, std::uint64_t k);
std::uint64_t tuple_count(std::size_t n);

}  // namespace cutkit

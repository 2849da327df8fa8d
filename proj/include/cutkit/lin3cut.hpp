#pragma once

#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

struct Lin3CutSolution {
  NodeId s = 0;
  NodeId r = 0;
  NodeId t = 0;
  /// Star variant: nested pair t ∈ a ⊂ b ⊆ V∖{s}.
  /// Fixed variant: a = sink side of the {s,r}->{t} cut, b = sink side of the {s}->{r,t} cut.
  NodeSet a;
  NodeSet b;
  std::vector<ArcId> removed_arcs;
  Weight cost = 0;  // kInfinite when no finite solution exists
  std::size_t chain_length = 0;
  Weight bound = kInfinite;  // value of the cheapest crossing set when the chain stopped
};

Lin3CutSolution lin3cut_fixed_2approx(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t);
Lin3CutSolution lin3cut_star_32approx(const WeightedDigraph& g, NodeId s, NodeId t);

}  // namespace cutkit

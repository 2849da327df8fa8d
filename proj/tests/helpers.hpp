#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "cutkit/graph.hpp"

namespace th {

using namespace cutkit;

inline WeightedDigraph dg(std::size_t n, std::initializer_list<std::tuple<NodeId, NodeId, Weight>> arcs) {
  std::vector<Arc> a;
  for (auto [u, v, w] : arcs) a.push_back({u, v, w});
  return WeightedDigraph(n, a);
}

inline UndirectedGraph ug(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v, 1});
  return UndirectedGraph(n, e);
}

inline NodeSet ns(std::size_t n, std::initializer_list<NodeId> ids) { return NodeSet::of(n, ids); }

}  // namespace th

#include "cutkit/generators.hpp"

#include <bit>

#include "cutkit/error.hpp"

namespace cutkit {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw InvalidInput("empty range");
  std::uint64_t span = hi - lo + 1;
  return span == 0 ? rng() : lo + rng() % span;
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) < p;
}

WeightedDigraph random_digraph(std::size_t n, double p, Weight wmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && coin(rng, p)) arcs.push_back({u, v, draw(rng, 1, wmax)});
  return WeightedDigraph(n, std::move(arcs));
}

UndirectedGraph random_graph(std::size_t n, double p, Weight wmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.push_back({u, v, draw(rng, 1, wmax)});
  return UndirectedGraph(n, std::move(edges));
}

PartiteGraph random_partite(std::size_t n, int k, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PartiteGraph out;
  out.parts.resize(n);
  for (auto& part : out.parts) part = static_cast<int>(draw(rng, 0, static_cast<std::uint64_t>(k - 1)));
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (out.parts[u] != out.parts[v] && coin(rng, p)) edges.push_back({u, v, 1});
  out.graph = UndirectedGraph(n, std::move(edges));
  return out;
}

std::vector<Weight> random_weights(std::size_t n, Weight wmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Weight> w(n);
  for (auto& x : w) x = draw(rng, 1, wmax);
  return w;
}

UndirectedGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n), 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return UndirectedGraph(leaves + 1, std::move(edges));
}

UndirectedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph prism_graph() {
  return UndirectedGraph(6, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {3, 4, 1}, {4, 5, 1}, {5, 3, 1},
                             {0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
}

UndirectedGraph petersen_graph() {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<NodeId>((i + 1) % 5), 1});
    edges.push_back({i, i + 5, 1});
    edges.push_back({i + 5, static_cast<NodeId>(5 + (i + 2) % 5), 1});
  }
  return UndirectedGraph(10, std::move(edges));
}

WeightedDigraph bidirected_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId v = 0; v < n; ++v) {
    NodeId w = static_cast<NodeId>((v + 1) % n);
    arcs.push_back({v, w, 1});
    arcs.push_back({w, v, 1});
  }
  return WeightedDigraph(n, std::move(arcs));
}

std::vector<WeightedDigraph> all_small_digraphs(std::size_t n, std::size_t max_arcs) {
  std::vector<std::pair<NodeId, NodeId>> slots;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  if (slots.size() > 20) throw InvalidInput("too many arc slots to enumerate");
  std::vector<WeightedDigraph> out;
  for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) > max_arcs) continue;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (m >> i & 1) arcs.push_back({slots[i].first, slots[i].second, 1});
    out.emplace_back(n, std::move(arcs));
  }
  return out;
}

}  // namespace cutkit

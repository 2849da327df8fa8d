#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

/// Uniform integer in [lo, hi] from raw engine output, so streams match across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);
bool coin(std::mt19937_64& rng, double p);

/// Each ordered pair becomes an arc with probability p; weights uniform in [1, wmax].
WeightedDigraph random_digraph(std::size_t n, double p, Weight wmax, std::uint64_t seed);
UndirectedGraph random_graph(std::size_t n, double p, Weight wmax, std::uint64_t seed);

struct PartiteGraph {
  UndirectedGraph graph;
  std::vector<int> parts;
};

/// Random part labels in [0,k); each cross-part pair is an edge with probability p.
PartiteGraph random_partite(std::size_t n, int k, double p, std::uint64_t seed);

std::vector<Weight> random_weights(std::size_t n, Weight wmax, std::uint64_t seed);

UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph path_graph(std::size_t n);
UndirectedGraph star_graph(std::size_t leaves);  // centre is node 0
UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph prism_graph();
UndirectedGraph petersen_graph();
WeightedDigraph bidirected_cycle(std::size_t n);

/// Every simple digraph on n nodes with at most max_arcs unit arcs.
std::vector<WeightedDigraph> all_small_digraphs(std::size_t n, std::size_t max_arcs);

}  // namespace cutkit

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cutkit/graph.hpp"

namespace cutkit {

struct Partition {
  std::vector<int> block_of;  // canonical: blocks numbered by first occurrence
  int k = 0;
  Weight gamma = 0;
  std::vector<NodeSet> blocks() const;
  bool operator==(const Partition&) const = default;
};

/// Renumbers blocks by first occurrence and recomputes k and gamma.
Partition make_partition(const UndirectedGraph& g, std::vector<int> labels);

struct EnumeratedCuts {
  int k = 0;
  Weight best = kInfinite;
  std::vector<Partition> partitions;  // sorted by (gamma, labels)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool exact = false;
};

enum class EnumerationMode { automatic, monte_carlo, exact };

struct KcutOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  EnumerationMode mode = EnumerationMode::automatic;
  unsigned threads = 1;
  std::size_t contract_to = 0;      // super-nodes left per trial before exhaustive split; 0 means 2k
  std::uint64_t trial_cap = 200000;
};

/// ⌈n^{2(k−1)} ln n⌉, capped.
std::uint64_t default_trials(std::size_t n, int k, std::uint64_t cap);

/// All k-partitions of value at most factor·(best); automatic mode is exact for n <= 10.
EnumeratedCuts enumerate_2approx_kcuts(const UndirectedGraph& g, int k, const KcutOptions& opt = {});
EnumeratedCuts enumerate_kcuts_exact(const UndirectedGraph& g, int k, Weight factor = 2);

Partition st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const KcutOptions& opt = {});

struct MultiwaySolution {
  NodeSet removed;
  Weight cost = 0;
  double lp_value = 0.0;
  std::vector<NodeId> terminals;
};

MultiwaySolution node_multiway_cut_approx(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                                          const std::vector<Weight>& costs);
/// lp_value holds the minimum LP value over the triples tried.
MultiwaySolution node_3cut_approx(const UndirectedGraph& g, const std::vector<Weight>& costs, unsigned threads = 1);

std::vector<Weight> node_costs(const UndirectedGraph& g);

/// splitmix64 mix of (seed, index); used for per-trial streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cutkit

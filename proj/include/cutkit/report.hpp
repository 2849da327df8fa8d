#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cutkit/io.hpp"

namespace cutkit {

using Json = nlohmann::json;

/// Options common to every entry point (all optional):
///   s, t, r          node tokens (terminal name, 1-based id, or label)
///   k, terminals     k-cut size, multiway terminal tokens
///   variant, method  problem flavour
///   seed, threads, trials, tuple_limit, mode
///   oracle           also run the exhaustive oracle and report the ratio
///   raw              oracle command: use the raw-subset cross-oracle
///   parts            1-based part labels for gadget commands
///   max_nodes, max_subsets, time_cap   oracle budget

/// Runs a solver and returns a SolutionReport. Throws Infeasible, InvalidInput,
/// BudgetExceeded or NumericalError.
Json solve_report(const AnyGraph& g, const std::string& problem, const Json& opts);
Json oracle_report(const AnyGraph& g, const std::string& problem, const Json& opts);

/// what: "gadget" (needs g), "dab", "skeleton".
Json verify_report(const AnyGraph* g, const std::string& what, const Json& opts);

struct Generated {
  AnyGraph graph;
  std::vector<int> parts;  // 0-based; empty unless the family has parts
};

/// Families: digraph, graph, partite, cycle, path, star, complete, prism,
/// petersen, bicycle, dab, skeleton.
Generated generate(const std::string& family, const Json& opts);

/// Vertex-cover gadget for kind "3cut", "bicut" or "s-star".
AnyGraph reduce(const AnyGraph& g, const std::string& kind, const Json& opts);

/// JSON output carries "parts" (1-based) when given.
std::string emit_with_parts(const AnyGraph& g, const std::vector<int>& parts, Format f);

/// Suites: ratios, gap, gadgets. Returns CSV text.
std::string run_experiment(const std::string& suite, const Json& opts);

/// Part labels from opts["parts"] or, failing that, a k-colouring of g.
std::vector<int> parts_for(const UndirectedGraph& g, int k, const Json& opts);

}  // namespace cutkit

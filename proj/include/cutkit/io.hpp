#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "cutkit/graph.hpp"

namespace cutkit {

using AnyGraph = std::variant<WeightedDigraph, UndirectedGraph>;

enum class Format { text, json };

/// Detects JSON by a leading '{', otherwise reads the line format.
AnyGraph parse_graph(std::string_view input);
AnyGraph parse_text(std::string_view input);
AnyGraph parse_json(std::string_view input);
AnyGraph load_graph(const std::string& path);

std::string emit_text(const AnyGraph& g);
std::string emit_json(const AnyGraph& g);
std::string emit(const AnyGraph& g, Format f);

/// Arcs (edges) sorted by (tail, head, weight); node data untouched.
WeightedDigraph canonical(const WeightedDigraph& g);
UndirectedGraph canonical(const UndirectedGraph& g);

/// Optional per-node part indices carried in the JSON "parts" field (0-based internally).
std::vector<int> parse_parts_json(std::string_view input);

/// Resolves "3", a terminal name, or a label to a 0-based node id.
NodeId resolve_node(const AnyGraph& g, const std::string& token);

std::string weight_to_string(Weight w);

}  // namespace cutkit

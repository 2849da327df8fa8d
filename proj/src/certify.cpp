#include "cutkit/certify.hpp"

#include <algorithm>

namespace cutkit {

namespace {

Certificate pass() { return {true, ""}; }
Certificate fail(std::string why) { return {false, std::move(why)}; }

NodeSet single(std::size_t n, NodeId v) { return NodeSet::of(n, {v}); }

bool valid_ids(const WeightedDigraph& g, const std::vector<ArcId>& arcs) {
  return std::all_of(arcs.begin(), arcs.end(), [&](ArcId a) { return a < g.arc_count(); });
}

}  // namespace

Certificate certify_st_edge_double_cut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s,
                                       NodeId t) {
  if (!valid_ids(g, removed)) return fail("arc id out of range");
  WeightedDigraph h = remove_arcs(g, removed);
  const std::size_t n = g.node_count();
  NodeSet both = reach_to(h, single(n, s)) & reach_to(h, single(n, t));
  if (!both.empty()) return fail("node " + g.label(both.first()) + " still reaches both terminals");
  return pass();
}

Certificate certify_st_node_double_cut(const WeightedDigraph& g, const NodeSet& removed, NodeId s, NodeId t) {
  if (removed.contains(s) || removed.contains(t)) return fail("a terminal was removed");
  WeightedDigraph h = remove_nodes(g, removed);
  const std::size_t n = g.node_count();
  NodeSet both = (reach_to(h, single(n, s)) & reach_to(h, single(n, t))) - removed;
  if (!both.empty()) return fail("node " + g.label(both.first()) + " still reaches both terminals");
  return pass();
}

Certificate certify_double_cut(const WeightedDigraph& g, const std::vector<ArcId>& removed_arcs,
                               const NodeSet& removed_nodes) {
  if (!valid_ids(g, removed_arcs)) return fail("arc id out of range");
  const std::size_t n = g.node_count();
  WeightedDigraph h = remove_nodes(remove_arcs(g, removed_arcs), removed_nodes);
  NodeSet alive = NodeSet::full(n) - removed_nodes;
  // A source component is one whose members are reached only from inside it.
  int sources = 0;
  NodeSet seen(n);
  alive.for_each([&](NodeId v) {
    if (seen.contains(v)) return;
    NodeSet from = reach(h, single(n, v));
    NodeSet to = reach_to(h, single(n, v)) & alive;
    NodeSet scc = from & to;
    seen |= scc;
    if (to.subset_of(scc)) ++sources;
  });
  if (sources < 2) return fail("an arborescence survives");
  return pass();
}

Certificate certify_st_bicut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s, NodeId t) {
  if (!valid_ids(g, removed)) return fail("arc id out of range");
  WeightedDigraph h = remove_arcs(g, removed);
  const std::size_t n = g.node_count();
  if (reach(h, single(n, s)).contains(t)) return fail("s still reaches t");
  if (reach(h, single(n, t)).contains(s)) return fail("t still reaches s");
  return pass();
}

Certificate certify_node_bicut(const WeightedDigraph& g, const NodeSet& removed, NodeId s, NodeId t) {
  if (s == t) return fail("witness pair is not distinct");
  if (removed.contains(s) || removed.contains(t)) return fail("a witness node was removed");
  WeightedDigraph h = remove_nodes(g, removed);
  const std::size_t n = g.node_count();
  if (reach(h, single(n, s)).contains(t)) return fail("s still reaches t");
  if (reach(h, single(n, t)).contains(s)) return fail("t still reaches s");
  return pass();
}

Certificate certify_bicut_pair(const WeightedDigraph& g, const NodeSet& a, const NodeSet& b,
                               const std::vector<ArcId>& removed) {
  if (!uncomparable(a, b)) return fail("pair is comparable");
  if (!valid_ids(g, removed)) return fail("arc id out of range");
  WeightedDigraph h = remove_arcs(g, removed);
  if (reach(h, a - b).intersects(b - a)) return fail("A-B reaches B-A");
  if (reach(h, b - a).intersects(a - b)) return fail("B-A reaches A-B");
  return pass();
}

Certificate certify_lin3cut(const WeightedDigraph& g, const std::vector<ArcId>& removed, NodeId s, NodeId r,
                            NodeId t) {
  if (s == r || r == t || s == t) return fail("s, r, t are not distinct");
  if (!valid_ids(g, removed)) return fail("arc id out of range");
  WeightedDigraph h = remove_arcs(g, removed);
  const std::size_t n = g.node_count();
  NodeSet from_s = reach(h, single(n, s));
  if (from_s.contains(r)) return fail("s still reaches r");
  if (from_s.contains(t)) return fail("s still reaches t");
  if (reach(h, single(n, r)).contains(t)) return fail("r still reaches t");
  return pass();
}

Certificate certify_node_multiway(const UndirectedGraph& g, const NodeSet& removed,
                                  const std::vector<NodeId>& terminals) {
  for (NodeId t : terminals)
    if (removed.contains(t)) return fail("a terminal was removed");
  auto comp = components(g, removed);
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      if (comp[terminals[i]] == comp[terminals[j]])
        return fail("terminals " + g.label(terminals[i]) + " and " + g.label(terminals[j]) + " stay connected");
  return pass();
}

Certificate certify_node_3cut(const UndirectedGraph& g, const NodeSet& removed) {
  int c = component_count(g, removed);
  if (c < 3) return fail("only " + std::to_string(c) + " components remain");
  return pass();
}

Certificate certify_sep_kcut(const UndirectedGraph& g, const std::vector<int>& block_of, NodeId s, NodeId t, int k,
                             Weight claimed) {
  if (block_of.size() != g.node_count()) return fail("label vector has wrong length");
  std::vector<char> used(static_cast<std::size_t>(std::max(k, 0)), 0);
  for (int b : block_of) {
    if (b < 0 || b >= k) return fail("block label out of range");
    used[b] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return fail("some block is empty");
  if (block_of[s] == block_of[t]) return fail("s and t share a block");
  if (partition_value(g, block_of) != claimed) return fail("claimed value does not match the partition");
  return pass();
}

}  // namespace cutkit

#include "cutkit/flow.hpp"

#include <algorithm>
#include <limits>

#include "cutkit/error.hpp"

namespace cutkit {

FlowSolver::FlowSolver(const WeightedDigraph& g) : g_(&g), n_(g.node_count()) {
  Weight total = g.total_finite_weight();
  if (total >= static_cast<Weight>(std::numeric_limits<std::int64_t>::max() / 4))
    throw InvalidInput("total arc weight too large for exact flow");
  big_ = static_cast<std::int64_t>(total) + 1;

  const auto& arcs = g.arcs();
  std::vector<std::uint32_t> deg(n_ + 1, 0);
  for (const Arc& a : arcs) {
    ++deg[a.tail];
    ++deg[a.head];
  }
  start_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) start_[v + 1] = start_[v] + deg[v];
  std::size_t m2 = 2 * arcs.size();
  to_.assign(m2, 0);
  rev_.assign(m2, 0);
  cap0_.assign(m2, 0);
  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  for (const Arc& a : arcs) {
    std::uint32_t f = fill[a.tail]++;
    std::uint32_t r = fill[a.head]++;
    to_[f] = a.head;
    to_[r] = a.tail;
    rev_[f] = r;
    rev_[r] = f;
    cap0_[f] = a.weight == kInfinite ? big_ : static_cast<std::int64_t>(a.weight);
    cap0_[r] = 0;
  }
  level_.assign(n_, -1);
  it_.assign(n_, 0);
}

bool FlowSolver::bfs(const std::vector<char>& is_source, const std::vector<char>& is_sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<std::uint32_t> q;
  q.reserve(n_);
  for (std::size_t v = 0; v < n_; ++v)
    if (is_source[v]) {
      level_[v] = 0;
      q.push_back(static_cast<std::uint32_t>(v));
    }
  bool hit = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::uint32_t v = q[i];
    if (is_sink[v]) {
      hit = true;
      continue;
    }
    for (std::uint32_t e = start_[v]; e < start_[v + 1]; ++e)
      if (cap_[e] > 0 && level_[to_[e]] < 0) {
        level_[to_[e]] = level_[v] + 1;
        q.push_back(to_[e]);
      }
  }
  return hit;
}

std::int64_t FlowSolver::dfs(std::uint32_t v, std::int64_t pushed, const std::vector<char>& is_sink) {
  if (is_sink[v]) return pushed;
  for (std::uint32_t& e = it_[v]; e < start_[v + 1]; ++e) {
    std::uint32_t w = to_[e];
    if (cap_[e] <= 0 || level_[w] != level_[v] + 1) continue;
    std::int64_t got = dfs(w, std::min(pushed, cap_[e]), is_sink);
    if (got > 0) {
      cap_[e] -= got;
      cap_[rev_[e]] += got;
      return got;
    }
  }
  return 0;
}

CutResult FlowSolver::solve(const NodeSet& sources, const NodeSet& sinks) {
  if (sources.empty() || sinks.empty()) throw InvalidInput("min cut needs nonempty sources and sinks");
  if (sources.intersects(sinks)) throw InvalidInput("sources and sinks overlap");
  std::vector<char> is_source(n_, 0), is_sink(n_, 0);
  sources.for_each([&](NodeId v) {
    if (v >= n_) throw InvalidInput("source out of range");
    is_source[v] = 1;
  });
  sinks.for_each([&](NodeId v) {
    if (v >= n_) throw InvalidInput("sink out of range");
    is_sink[v] = 1;
  });
  cap_ = cap0_;
  std::int64_t flow = 0;
  const std::int64_t limit = big_;
  while (flow < limit && bfs(is_source, is_sink)) {
    std::copy(start_.begin(), start_.end() - 1, it_.begin());
    for (std::size_t s = 0; s < n_ && flow < limit; ++s) {
      if (!is_source[s]) continue;
      while (flow < limit) {
        std::int64_t f = dfs(static_cast<std::uint32_t>(s), limit, is_sink);
        if (f == 0) break;
        flow += f;
      }
    }
  }
  CutResult r;
  if (flow >= limit) {
    r.value = kInfinite;
    r.min_sink_side = NodeSet(n_);
    r.max_sink_side = NodeSet(n_);
    return r;
  }
  r.value = static_cast<Weight>(flow);

  NodeSet src_side(n_);
  std::vector<std::uint32_t> stack;
  sources.for_each([&](NodeId v) {
    src_side.insert(v);
    stack.push_back(v);
  });
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t e = start_[v]; e < start_[v + 1]; ++e)
      if (cap_[e] > 0 && !src_side.contains(to_[e])) {
        src_side.insert(to_[e]);
        stack.push_back(to_[e]);
      }
  }
  r.max_sink_side = src_side.complement();

  // u reaches a sink in the residual graph iff some residual edge u->w has w reaching a sink;
  // walking backwards uses the reverse edge's partner capacity.
  NodeSet to_sink(n_);
  sinks.for_each([&](NodeId v) {
    to_sink.insert(v);
    stack.push_back(v);
  });
  while (!stack.empty()) {
    std::uint32_t w = stack.back();
    stack.pop_back();
    for (std::uint32_t e = start_[w]; e < start_[w + 1]; ++e) {
      std::uint32_t u = to_[e];
      if (cap_[rev_[e]] > 0 && !to_sink.contains(u)) {
        to_sink.insert(u);
        stack.push_back(u);
      }
    }
  }
  r.min_sink_side = to_sink;

  const auto& arcs = g_->arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (r.min_sink_side.contains(arcs[i].head) && !r.min_sink_side.contains(arcs[i].tail)) {
      if (arcs[i].weight == kInfinite) throw NumericalError("infinite arc in a finite cut");
      r.cut_arcs.push_back(static_cast<ArcId>(i));
    }
  return r;
}

CutResult min_cut(const WeightedDigraph& g, const NodeSet& sources, const NodeSet& sinks) {
  FlowSolver f(g);
  return f.solve(sources, sinks);
}

CutResult constrained_min_cut(const WeightedDigraph& g, const NodeSet& force_in, const NodeSet& force_out) {
  return min_cut(g, force_out, force_in);
}

CutResult undirected_min_cut(const UndirectedGraph& g, NodeId s, NodeId t) {
  if (s == t) throw InvalidInput("undirected min cut needs s != t");
  if (s >= g.node_count() || t >= g.node_count()) throw InvalidInput("terminal out of range");
  const std::size_t n = g.node_count();
  return min_cut(g.bidirected(), NodeSet::of(n, {s}), NodeSet::of(n, {t}));
}

}  // namespace cutkit

#include "cutkit/kcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "cutkit/error.hpp"
#include "cutkit/flow.hpp"
#include "cutkit/lp.hpp"
#include "cutkit/parallel.hpp"

namespace cutkit {

namespace {

std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  int next = 0;
  std::map<int, int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = seen.emplace(labels[i], next);
    if (fresh) ++next;
    out[i] = it->second;
  }
  return out;
}

/// Calls f(labels) for every partition of r items into exactly k nonempty blocks
/// (restricted growth strings, lexicographic).
template <class F>
void for_each_partition(std::size_t r, int k, F&& f) {
  if (k <= 0 || static_cast<std::size_t>(k) > r) return;
  std::vector<int> lab(r, 0);
  auto rec = [&](auto& self, std::size_t i, int used) -> void {
    if (i == r) {
      if (used == k) f(lab);
      return;
    }
    if (static_cast<std::size_t>(k - used) > r - i) return;
    int top = std::min(used + 1, k);
    for (int b = 0; b < top; ++b) {
      lab[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

double unit_open(std::mt19937_64& rng) {
  // (0, 1]
  return (static_cast<double>(rng() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
}

using CutMap = std::map<std::vector<int>, Weight>;

void prune(CutMap& m, Weight best, Weight factor) {
  Weight limit = mul_weight(best, factor);
  for (auto it = m.begin(); it != m.end();)
    it = it->second > limit ? m.erase(it) : std::next(it);
}

EnumeratedCuts collect(const CutMap& m, int k, Weight factor) {
  EnumeratedCuts out;
  out.k = k;
  for (const auto& [lab, gamma] : m) out.best = std::min(out.best, gamma);
  Weight limit = mul_weight(out.best, factor);
  for (const auto& [lab, gamma] : m)
    if (gamma <= limit && gamma != kInfinite) out.partitions.push_back(Partition{lab, k, gamma});
  std::sort(out.partitions.begin(), out.partitions.end(), [](const Partition& a, const Partition& b) {
    return std::tie(a.gamma, a.block_of) < std::tie(b.gamma, b.block_of);
  });
  return out;
}

}  // namespace

std::vector<NodeSet> Partition::blocks() const {
  std::vector<NodeSet> b(static_cast<std::size_t>(k), NodeSet(block_of.size()));
  for (std::size_t v = 0; v < block_of.size(); ++v) b[block_of[v]].insert(static_cast<NodeId>(v));
  return b;
}

Partition make_partition(const UndirectedGraph& g, std::vector<int> labels) {
  if (labels.size() != g.node_count()) throw InvalidInput("partition label vector has wrong length");
  Partition p;
  p.block_of = canonical_labels(labels);
  p.k = p.block_of.empty() ? 0 : *std::max_element(p.block_of.begin(), p.block_of.end()) + 1;
  p.gamma = partition_value(g, p.block_of);
  return p;
}

std::vector<Weight> node_costs(const UndirectedGraph& g) {
  std::vector<Weight> c(g.node_count());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = g.node_weight(static_cast<NodeId>(v));
  return c;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t default_trials(std::size_t n, int k, std::uint64_t cap) {
  if (n < 2) return 1;
  double v = std::pow(static_cast<double>(n), 2.0 * (k - 1)) * std::log(static_cast<double>(n));
  if (!(v < static_cast<double>(cap))) return cap;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(v)));
}

EnumeratedCuts enumerate_kcuts_exact(const UndirectedGraph& g, int k, Weight factor) {
  const std::size_t n = g.node_count();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw InvalidInput("k must lie in [1, n]");
  CutMap all;
  Weight best = kInfinite;
  for_each_partition(n, k, [&](const std::vector<int>& lab) {
    Weight gamma = partition_value(g, lab);
    if (gamma == kInfinite) return;
    if (gamma > mul_weight(best, factor)) return;
    if (gamma < best) {
      best = gamma;
      prune(all, best, factor);
    }
    all.emplace(lab, gamma);
  });
  EnumeratedCuts out = collect(all, k, factor);
  out.exact = true;
  return out;
}

EnumeratedCuts enumerate_2approx_kcuts(const UndirectedGraph& g, int k, const KcutOptions& opt) {
  const std::size_t n = g.node_count();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw InvalidInput("k must lie in [1, n]");
  bool exact = opt.mode == EnumerationMode::exact || (opt.mode == EnumerationMode::automatic && n <= 10);
  if (exact) {
    EnumeratedCuts out = enumerate_kcuts_exact(g, k, 2);
    out.seed = opt.seed;
    return out;
  }
  const std::uint64_t trials = opt.trials ? *opt.trials : default_trials(n, k, opt.trial_cap);
  const std::size_t r = std::min(n, std::max<std::size_t>(static_cast<std::size_t>(k),
                                                           opt.contract_to ? opt.contract_to : 2 * k));
  const auto& edges = g.edges();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(trials, 64));
  std::vector<CutMap> found(chunks);
  std::vector<Weight> local_best(chunks, kInfinite);

  parallel_for(chunks, opt.threads, [&](std::size_t c, unsigned) {
    std::uint64_t lo = trials * c / chunks, hi = trials * (c + 1) / chunks;
    std::vector<std::pair<double, std::size_t>> keys(edges.size());
    std::vector<Weight> between(r * r);
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      std::mt19937_64 rng(derive_seed(opt.seed, trial));
      for (std::size_t e = 0; e < edges.size(); ++e) {
        Weight w = edges[e].weight;
        double key = w == kInfinite ? -1.0
                     : w == 0       ? std::numeric_limits<double>::infinity()
                                    : -std::log(unit_open(rng)) / static_cast<double>(w);
        keys[e] = {key, e};
      }
      std::sort(keys.begin(), keys.end());
      Dsu dsu(n);
      std::size_t comps = n;
      for (const auto& [key, e] : keys) {
        if (comps <= r || key == std::numeric_limits<double>::infinity()) break;
        if (dsu.unite(static_cast<int>(edges[e].u), static_cast<int>(edges[e].v))) --comps;
      }
      while (comps > r) {
        std::vector<int> roots;
        for (std::size_t v = 0; v < n; ++v)
          if (dsu.find(static_cast<int>(v)) == static_cast<int>(v)) roots.push_back(static_cast<int>(v));
        std::size_t i = rng() % roots.size();
        std::size_t j = rng() % (roots.size() - 1);
        if (j >= i) ++j;
        dsu.unite(roots[i], roots[j]);
        --comps;
      }
      std::vector<int> super(n, -1), root_id(n, -1);
      int next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        int root = dsu.find(static_cast<int>(v));
        if (root_id[root] < 0) root_id[root] = next++;
        super[v] = root_id[root];
      }
      std::fill(between.begin(), between.end(), 0);
      for (const Edge& e : edges) {
        int a = super[e.u], b = super[e.v];
        if (a == b) continue;
        between[a * r + b] = add_weight(between[a * r + b], e.weight);
      }
      for_each_partition(r, k, [&](const std::vector<int>& lab) {
        Weight gamma = 0;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (lab[a] != lab[b]) gamma = add_weight(gamma, between[a * r + b]);
        if (gamma == kInfinite || gamma > mul_weight(local_best[c], 2)) return;
        if (gamma < local_best[c]) {
          local_best[c] = gamma;
          prune(found[c], gamma, 2);
        }
        std::vector<int> node_lab(n);
        for (std::size_t v = 0; v < n; ++v) node_lab[v] = lab[super[v]];
        found[c].emplace(canonical_labels(node_lab), gamma);
      });
    }
  });
  CutMap merged;
  for (auto& m : found) merged.insert(m.begin(), m.end());
  EnumeratedCuts out = collect(merged, k, 2);
  out.trials = trials;
  out.seed = opt.seed;
  return out;
}

Partition st_sep_kcut(const UndirectedGraph& g, NodeId s, NodeId t, int k, const KcutOptions& opt) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n) throw InvalidInput("terminal out of range");
  if (s == t) throw InvalidInput("terminals must differ");
  if (k < 2 || static_cast<std::size_t>(k) > n) throw InvalidInput("k must lie in [2, n]");

  std::vector<Partition> coarse;
  if (k == 2) {
    coarse.push_back(Partition{std::vector<int>(n, 0), 1, 0});
  } else {
    std::vector<Edge> edges = g.edges();
    edges.push_back({s, t, kInfinite});
    UndirectedGraph h(n, std::move(edges));
    coarse = enumerate_2approx_kcuts(h, k - 1, opt).partitions;
  }
  std::optional<Partition> best;
  for (const Partition& p : coarse) {
    int wb = p.block_of[s];
    NodeSet w(n);
    for (NodeId v = 0; v < n; ++v)
      if (p.block_of[v] == wb) w.insert(v);
    InducedUndirected sub = induced_subgraph(g, w);
    NodeId ss = 0, tt = 0;
    for (NodeId i = 0; i < sub.to_parent.size(); ++i) {
      if (sub.to_parent[i] == s) ss = i;
      if (sub.to_parent[i] == t) tt = i;
    }
    CutResult cut = undirected_min_cut(sub.graph, ss, tt);
    if (!cut.finite()) continue;
    std::vector<int> labels = p.block_of;
    for (NodeId i = 0; i < sub.to_parent.size(); ++i)
      if (cut.min_sink_side.contains(i)) labels[sub.to_parent[i]] = p.k;
    Partition q = make_partition(g, std::move(labels));
    if (!best || std::tie(q.gamma, q.block_of) < std::tie(best->gamma, best->block_of)) best = q;
  }
  if (!best) throw Infeasible("no separating k-partition found");
  return *best;
}

namespace {

/// Node-weighted distances from src over an undirected graph; the source contributes nothing.
std::vector<double> undirected_distances(const UndirectedGraph& g, NodeId src, const std::vector<double>& x,
                                         std::vector<int>& prev) {
  const std::size_t n = g.node_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  prev.assign(n, -1);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[src] = 0.0;
  pq.push({0.0, src});
  std::vector<char> done(n, 0);
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (ArcId e : g.incident(v)) {
      NodeId w = g.other(e, v);
      double cand = dv + x[w];
      if (cand < dist[w]) {
        dist[w] = cand;
        prev[w] = static_cast<int>(v);
        pq.push({cand, w});
      }
    }
  }
  return dist;
}

bool terminals_separated(const UndirectedGraph& g, const std::vector<NodeId>& terms, const NodeSet& removed) {
  auto comp = components(g, removed);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (comp[terms[i]] == comp[terms[j]]) return false;
  return true;
}

}  // namespace

MultiwaySolution node_multiway_cut_approx(const UndirectedGraph& g, const std::vector<NodeId>& terminals,
                                          const std::vector<Weight>& costs) {
  const std::size_t n = g.node_count();
  if (terminals.size() < 2) throw InvalidInput("multiway cut needs at least two terminals");
  if (costs.size() != n) throw InvalidInput("cost vector has wrong length");
  std::vector<char> is_term(n, 0);
  for (NodeId t : terminals) {
    if (t >= n) throw InvalidInput("terminal out of range");
    if (is_term[t]) throw InvalidInput("duplicate terminal");
    is_term[t] = 1;
  }
  for (std::size_t i = 0; i < terminals.size(); ++i)
    for (std::size_t j = i + 1; j < terminals.size(); ++j)
      if (g.adjacent(terminals[i], terminals[j])) throw Infeasible("two terminals are adjacent");

  LpModel model;
  model.num_vars = static_cast<int>(n);
  model.objective.assign(n, 0.0);
  model.fixed_zero.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    bool fixed = is_term[v] || costs[v] == kInfinite;
    model.fixed_zero[v] = fixed;
    model.objective[v] = fixed ? 0.0 : static_cast<double>(costs[v]);
  }
  const double tol = 1e-7;
  auto oracle = [&](std::span<const double> xs) {
    std::vector<double> x(xs.begin(), xs.end());
    std::vector<LpRow> rows;
    std::vector<int> prev;
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      auto dist = undirected_distances(g, terminals[i], x, prev);
      for (std::size_t j = i + 1; j < terminals.size(); ++j) {
        NodeId tj = terminals[j];
        if (dist[tj] == std::numeric_limits<double>::infinity() || dist[tj] - x[tj] >= 1.0 - tol) continue;
        LpRow row;
        for (int v = prev[tj]; v >= 0 && static_cast<NodeId>(v) != terminals[i]; v = prev[v])
          row.coeffs.emplace_back(v, 1.0);
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };
  LpSolution lp = solve_with_separation(model, oracle);

  MultiwaySolution sol;
  sol.terminals = terminals;
  sol.lp_value = lp.value;
  sol.removed = NodeSet(n);
  for (NodeId v = 0; v < n; ++v)
    if (!model.fixed_zero[v] && lp.x[v] >= 0.5 - tol) sol.removed.insert(v);
  if (!terminals_separated(g, terminals, sol.removed)) {
    sol.removed = NodeSet(n);
    for (NodeId v = 0; v < n; ++v)
      if (!model.fixed_zero[v] && lp.x[v] > 1e-9) sol.removed.insert(v);
    if (!terminals_separated(g, terminals, sol.removed))
      throw NumericalError("multiway LP point does not separate the terminals");
  }
  Weight c = 0;
  sol.removed.for_each([&](NodeId v) { c = add_weight(c, costs[v]); });
  sol.cost = c;
  return sol;
}

MultiwaySolution node_3cut_approx(const UndirectedGraph& g, const std::vector<Weight>& costs, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n < 3) throw InvalidInput("node 3-cut needs at least three nodes");
  std::vector<std::array<NodeId, 3>> triples;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c)) triples.push_back({a, b, c});
  std::vector<std::optional<MultiwaySolution>> results(triples.size());
  parallel_for(triples.size(), threads, [&](std::size_t i, unsigned) {
    try {
      const auto& tr = triples[i];
      results[i] = node_multiway_cut_approx(g, {tr[0], tr[1], tr[2]}, costs);
    } catch (const Infeasible&) {
    }
  });
  std::optional<MultiwaySolution> best;
  double lp_min = std::numeric_limits<double>::infinity();
  for (auto& r : results) {
    if (!r) continue;
    lp_min = std::min(lp_min, r->lp_value);
    if (!best || r->cost < best->cost) best = *r;
  }
  if (!best) throw Infeasible("no node triple can be separated");
  best->lp_value = lp_min;
  return *best;
}

}  // namespace cutkit

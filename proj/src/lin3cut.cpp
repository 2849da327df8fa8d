#include "cutkit/lin3cut.hpp"

#include <optional>

#include "cutkit/error.hpp"
#include "cutkit/flow.hpp"

namespace cutkit {

namespace {

struct Candidate {
  NodeSet set;
  Weight value = kInfinite;
};

void keep_better(std::optional<Candidate>& best, const CutResult& cut) {
  if (!cut.finite()) return;
  if (!best || cut.value < best->value) best = Candidate{cut.min_sink_side, cut.value};
}

class ChainBuilder {
 public:
  ChainBuilder(const WeightedDigraph& g, NodeId s, NodeId t)
      : g_(g), flow_(g), n_(g.node_count()), s_(s), t_(t), ground_(NodeSet::full(n_)) {
    ground_.erase(s);
  }

  CutResult cut(const NodeSet& force_in, const NodeSet& force_out) { return flow_.solve(force_out, force_in); }

  /// Cheapest s̄t-set strictly between two consecutive chain positions, over all gaps.
  std::optional<Candidate> best_novel(const std::vector<Candidate>& chain) {
    std::optional<Candidate> best;
    const std::size_t q = chain.size();
    for (std::size_t i = 0; i <= q; ++i) {
      const bool need_in = i > 0;
      const bool need_out = i < q;
      NodeSet lower = need_in ? chain[i - 1].set : NodeSet::of(n_, {t_});
      NodeSet upper = need_out ? chain[i].set : ground_;
      NodeSet free = upper - lower;
      free.erase(t_);
      if (free.empty() || (need_in && need_out && free.size() < 2)) continue;
      NodeSet force_out = upper.complement();
      force_out.insert(s_);

      std::optional<Candidate> gap;
      CutResult y0 = cut(lower, force_out);
      bool novel = y0.finite() && !(need_in && y0.min_sink_side == lower) &&
                   !(need_out && y0.min_sink_side == upper);
      if (novel) {
        gap = Candidate{y0.min_sink_side, y0.value};
      } else if (y0.finite()) {
        auto members = free.members();
        if (need_in && need_out) {
          for (NodeId v : members)
            for (NodeId u : members) {
              if (u == v) continue;
              NodeSet in = lower, out = force_out;
              in.insert(v);
              out.insert(u);
              keep_better(gap, cut(in, out));
            }
        } else if (need_in) {
          for (NodeId v : members) {
            NodeSet in = lower;
            in.insert(v);
            keep_better(gap, cut(in, force_out));
          }
        } else {
          for (NodeId u : members) {
            NodeSet out = force_out;
            out.insert(u);
            keep_better(gap, cut(lower, out));
          }
        }
      }
      if (gap && (!best || gap->value < best->value)) best = gap;
    }
    return best;
  }

  /// Cheapest s̄t-set crossing some chain member.
  std::optional<Candidate> best_crossing(const std::vector<Candidate>& chain) {
    std::vector<std::size_t> first(n_, chain.size());
    for (NodeId v = 0; v < n_; ++v)
      for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i].set.contains(v)) {
          first[v] = i;
          break;
        }
    std::optional<Candidate> best;
    for (NodeId x = 0; x < n_; ++x) {
      if (x == s_ || x == t_) continue;
      for (NodeId y = 0; y < n_; ++y) {
        if (y == s_ || y == t_ || y == x) continue;
        if (!(first[y] < first[x])) continue;
        keep_better(best, cut(NodeSet::of(n_, {t_, x}), NodeSet::of(n_, {s_, y})));
      }
    }
    return best;
  }

 private:
  const WeightedDigraph& g_;
  FlowSolver flow_;
  std::size_t n_;
  NodeId s_, t_;
  NodeSet ground_;
};

}  // namespace

Lin3CutSolution lin3cut_fixed_2approx(const WeightedDigraph& g, NodeId s, NodeId r, NodeId t) {
  const std::size_t n = g.node_count();
  if (s >= n || r >= n || t >= n) throw InvalidInput("terminal out of range");
  if (s == r || r == t || s == t) throw InvalidInput("s, r, t must be distinct");
  FlowSolver flow(g);
  CutResult first = flow.solve(NodeSet::of(n, {s}), NodeSet::of(n, {r, t}));
  CutResult second = flow.solve(NodeSet::of(n, {s, r}), NodeSet::of(n, {t}));
  Lin3CutSolution sol;
  sol.s = s;
  sol.r = r;
  sol.t = t;
  if (!first.finite() || !second.finite()) {
    sol.cost = kInfinite;
    return sol;
  }
  sol.a = second.min_sink_side;
  sol.b = first.min_sink_side;
  sol.removed_arcs = union_in_cut(g, sol.a, sol.b);
  sol.cost = arc_set_weight(g, sol.removed_arcs);
  return sol;
}

Lin3CutSolution lin3cut_star_32approx(const WeightedDigraph& g, NodeId s, NodeId t) {
  const std::size_t n = g.node_count();
  if (s >= n || t >= n) throw InvalidInput("terminal out of range");
  if (s == t) throw InvalidInput("s and t must differ");
  if (n < 3) throw Infeasible("linear 3-cut needs a third node");

  Lin3CutSolution sol;
  sol.s = s;
  sol.t = t;
  ChainBuilder builder(g, s, t);
  CutResult start = builder.cut(NodeSet::of(n, {t}), NodeSet::of(n, {s}));
  if (!start.finite()) {
    sol.cost = kInfinite;
    return sol;
  }
  std::vector<Candidate> chain{{start.min_sink_side, start.value}};
  std::optional<Candidate> crossing;
  while (true) {
    auto y = builder.best_novel(chain);
    crossing = builder.best_crossing(chain);
    if (y && (!crossing || y->value <= crossing->value)) {
      std::size_t pos = 0;
      while (pos < chain.size() && chain[pos].set.subset_of(y->set)) ++pos;
      chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(pos), *y);
      if (chain.size() > n) throw NumericalError("chain grew beyond the node count");
      continue;
    }
    break;
  }
  sol.chain_length = chain.size();
  sol.bound = crossing ? crossing->value : kInfinite;

  std::optional<CutPair> best;
  auto consider = [&](const NodeSet& a, const NodeSet& b) {
    CutPair p = beta_sigma(g, a, b);
    if (!best || p.beta < best->beta) best = p;
  };
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) consider(chain[i].set, chain[j].set);
  if (crossing) {
    const NodeSet& z = crossing->set;
    for (const Candidate& m : chain) {
      const NodeSet& x = m.set;
      if (!uncomparable(x, z)) continue;
      consider(x & z, x);
      consider(x & z, z);
      consider(z, x | z);
      consider(x, x | z);
    }
  }
  if (!best) {
    sol.cost = kInfinite;
    return sol;
  }
  sol.a = best->a;
  sol.b = best->b;
  sol.removed_arcs = union_in_cut(g, sol.a, sol.b);
  sol.cost = best->beta;
  sol.r = (sol.b - sol.a).first();
  return sol;
}

}  // namespace cutkit

#include <functional>
#include <sstream>

#include "cutkit/bicut.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/gadgets.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/kcut.hpp"
#include "cutkit/lin3cut.hpp"
#include "cutkit/oracle.hpp"
#include "cutkit/report.hpp"

namespace cutkit {

namespace {

std::uint64_t opt_u64(const Json& o, const char* key, std::uint64_t dflt) {
  if (!o.contains(key) || !o[key].is_number_integer()) return dflt;
  return o[key].get<std::uint64_t>();
}

std::string wstr(Weight w) { return weight_to_string(w); }

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << x;
  return os.str();
}

/// One approximation/oracle comparison; bound is num/den.
struct RatioProblem {
  std::string name;
  Weight num;
  Weight den;
  std::function<Weight(const WeightedDigraph&)> approx;
  std::function<Weight(const WeightedDigraph&, const OracleBudget&)> exact;
};

std::vector<RatioProblem> ratio_problems(unsigned threads) {
  auto last = [](const WeightedDigraph& g) { return static_cast<NodeId>(g.node_count() - 1); };
  std::vector<RatioProblem> out;
  out.push_back({"global-bicut", 895, 448,
                 [threads](const WeightedDigraph& g) {
                   GlobalBicutOptions o;
                   o.threads = threads;
                   return approximate_global_bicut(g, o).cost;
                 },
                 [](const WeightedDigraph& g, const OracleBudget& b) { return oracle_edge_bicut(g, b).value; }});
  out.push_back({"st-bicut", 2, 1,
                 [last](const WeightedDigraph& g) { return st_edge_bicut_2approx(g, 0, last(g)).cost; },
                 [last](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_st_edge_bicut(g, 0, last(g), b).value;
                 }});
  out.push_back({"s-star-bicut", 2, 1, [](const WeightedDigraph& g) { return s_star_edge_bicut_2approx(g, 0).cost; },
                 [](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_s_star_edge_bicut(g, 0, b).value;
                 }});
  out.push_back({"lin3cut-star", 3, 2,
                 [last](const WeightedDigraph& g) { return lin3cut_star_32approx(g, 0, last(g)).cost; },
                 [last](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_lin3cut_star(g, 0, last(g), b).value;
                 }});
  out.push_back({"lin3cut-fixed", 2, 1,
                 [last](const WeightedDigraph& g) { return lin3cut_fixed_2approx(g, 0, 1, last(g)).cost; },
                 [last](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_lin3cut_fixed(g, 0, 1, last(g), b).value;
                 }});
  out.push_back({"node-double-cut", 2, 1,
                 [threads](const WeightedDigraph& g) { return node_double_cut_2approx(g, node_costs(g), threads).cost; },
                 [](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_node_double_cut(g, node_costs(g), b).value;
                 }});
  out.push_back({"node-bicut", 2, 1,
                 [threads](const WeightedDigraph& g) { return node_bicut_2approx(g, node_costs(g), threads).cost; },
                 [](const WeightedDigraph& g, const OracleBudget& b) {
                   return oracle_node_bicut(g, node_costs(g), b).value;
                 }});
  return out;
}

Weight guarded(const std::function<Weight()>& f) {
  try {
    return f();
  } catch (const Infeasible&) {
    return kInfinite;
  }
}

std::string ratios_suite(const Json& o) {
  const std::uint64_t seed = opt_u64(o, "seed", 1);
  const std::uint64_t count = opt_u64(o, "count", 20);
  const std::size_t nmin = opt_u64(o, "nmin", 3), nmax = opt_u64(o, "nmax", 6);
  const unsigned threads = static_cast<unsigned>(opt_u64(o, "threads", 1));
  OracleBudget budget;
  budget.max_nodes = opt_u64(o, "max_nodes", budget.max_nodes);
  budget.max_subsets = opt_u64(o, "max_subsets", budget.max_subsets);

  std::ostringstream csv;
  csv << "problem,instance,n,arcs,oracle,approx,ratio,bound,status\n";
  auto problems = ratio_problems(threads);
  std::vector<double> worst(problems.size(), 0.0);
  std::vector<bool> held(problems.size(), true);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const std::size_t n = nmin + static_cast<std::size_t>(s % (nmax - nmin + 1));
    WeightedDigraph g = random_digraph(n, 0.45, 3, s);
    for (std::size_t p = 0; p < problems.size(); ++p) {
      const RatioProblem& rp = problems[p];
      csv << rp.name << ',' << i << ',' << n << ',' << g.arc_count() << ',';
      Weight opt, apx;
      try {
        opt = guarded([&] { return rp.exact(g, budget); });
        apx = guarded([&] { return rp.approx(g); });
      } catch (const BudgetExceeded&) {
        csv << ",,,," << "skipped\n";
        continue;
      }
      std::string status;
      double ratio = 1.0;
      if (opt == kInfinite || apx == kInfinite) {
        status = opt == apx ? "infeasible" : "mismatch";
        if (status == "mismatch") held[p] = false;
      } else if (opt == 0) {
        status = apx == 0 ? "ok" : "violated";
        if (apx != 0) held[p] = false;
      } else {
        ratio = static_cast<double>(apx) / static_cast<double>(opt);
        bool ok = apx >= opt && static_cast<unsigned __int128>(apx) * rp.den <=
                                    static_cast<unsigned __int128>(opt) * rp.num;
        status = ok ? "ok" : "violated";
        if (!ok) held[p] = false;
        worst[p] = std::max(worst[p], ratio);
      }
      csv << wstr(opt) << ',' << wstr(apx) << ',' << fmt_double(ratio) << ',' << rp.num << '/' << rp.den << ','
          << status << '\n';
    }
  }
  for (std::size_t p = 0; p < problems.size(); ++p)
    csv << problems[p].name << ",max,,,,," << fmt_double(worst[p]) << ',' << problems[p].num << '/'
        << problems[p].den << ',' << (held[p] ? "ok" : "violated") << '\n';
  return csv.str();
}

std::string gap_suite(const Json& o) {
  OracleBudget budget;
  budget.max_nodes = opt_u64(o, "max_nodes", 10);
  std::ostringstream csv;
  csv << "a,b,r,nodes,arcs,lp,ab_over_r,uniform_feasible,ip,ip_lower_bound,status\n";
  const std::vector<std::pair<int, int>> sizes = {{1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 9}};
  for (auto [a, b] : sizes) {
    DabInstance inst = build_dab(a, b);
    auto costs = node_costs(inst.graph);
    double lp = solve_path_blocking_lp(inst.graph, inst.s(), inst.t(), costs).value;
    double bound = static_cast<double>(a) * b / inst.r;
    bool uniform = dab_uniform_solution_feasible(inst);
    std::string ip = "", status = "ok";
    try {
      Weight v = oracle_st_node_double_cut(inst.graph, inst.s(), inst.t(), costs, budget).value;
      ip = wstr(v);
      if (v < static_cast<Weight>(2 * a - 1)) status = "violated";
    } catch (const BudgetExceeded&) {
      status = "skipped";
    }
    if (lp > bound + 1e-6 || !uniform) status = "violated";
    csv << a << ',' << b << ',' << inst.r << ',' << inst.graph.node_count() << ',' << inst.graph.arc_count() << ','
        << fmt_double(lp) << ',' << fmt_double(bound) << ',' << (uniform ? "yes" : "no") << ',' << ip << ','
        << 2 * a - 1 << ',' << status << '\n';
  }
  return csv.str();
}

std::string gadgets_suite(const Json& o) {
  const std::uint64_t seed = opt_u64(o, "seed", 1);
  const std::uint64_t count = opt_u64(o, "count", 10);
  OracleBudget budget;
  std::ostringstream csv;
  csv << "gadget,instance,n,edges,source_opt,target_opt,back_feasible,equal\n";
  const std::vector<std::pair<std::string, GadgetKind>> kinds = {
      {"3cut", GadgetKind::node3cut}, {"bicut", GadgetKind::node_bicut}, {"s-star", GadgetKind::s_star_bicut}};
  for (const auto& [name, kind] : kinds) {
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t s = derive_seed(seed, i);
      const int k = kind == GadgetKind::node_bicut ? 4 : 3;
      const std::size_t n = static_cast<std::size_t>(k) + s % (9 - k);
      PartiteGraph pg = random_partite(n, k, 0.5, s);
      csv << name << ',' << i << ',' << n << ',' << pg.graph.edge_count() << ',';
      try {
        ReductionCheck c = verify_reduction(pg.graph, build_reduction(kind, pg.graph, pg.parts), budget);
        csv << wstr(c.source_opt) << ',' << wstr(c.target_opt) << ',' << (c.back_feasible ? "yes" : "no") << ','
            << (c.ok() ? "yes" : "no") << '\n';
      } catch (const BudgetExceeded&) {
        csv << ",,,skipped\n";
      }
    }
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    const std::size_t n = 3 + s % 6;
    UndirectedGraph g = random_graph(n, 0.45, 1, s);
    auto costs = node_costs(g);
    csv << "via-doublecut," << i << ',' << n << ',' << g.edge_count() << ',';
    try {
      Weight direct = oracle_node_3cut(g, costs, budget).value;
      Node3CutResult r;
      try {
        r = node3cut_via_doublecut(g, costs, [&](const WeightedDigraph& d, const auto& c) {
          OracleResult o = oracle_node_double_cut(d, c, budget);
          if (!o.feasible) throw Infeasible("no node double cut");
          return o.nodes;
        });
      } catch (const Infeasible&) {
      }
      bool back = r.cost == kInfinite || r.components >= 3;
      csv << wstr(direct) << ',' << wstr(r.cost) << ',' << (back ? "yes" : "no") << ','
          << (direct == r.cost && back ? "yes" : "no") << '\n';
    } catch (const BudgetExceeded&) {
      csv << ",,,skipped\n";
    }
  }
  return csv.str();
}

}  // namespace

std::string run_experiment(const std::string& suite, const Json& opts) {
  if (suite == "ratios") return ratios_suite(opts);
  if (suite == "gap") return gap_suite(opts);
  if (suite == "gadgets") return gadgets_suite(opts);
  throw InvalidInput("suite must be ratios, gap or gadgets");
}

}  // namespace cutkit

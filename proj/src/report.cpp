#include "cutkit/report.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "cutkit/bicut.hpp"
#include "cutkit/certify.hpp"
#include "cutkit/doublecut.hpp"
#include "cutkit/error.hpp"
#include "cutkit/gadgets.hpp"
#include "cutkit/generators.hpp"
#include "cutkit/kcut.hpp"
#include "cutkit/lin3cut.hpp"
#include "cutkit/oracle.hpp"
#include "cutkit/parallel.hpp"

namespace cutkit {

namespace {

Json weight_json(Weight w) { return w == kInfinite ? Json("inf") : Json(w); }

Json ids_json(const NodeSet& s) {
  Json a = Json::array();
  s.for_each([&](NodeId v) { a.push_back(v + 1); });
  return a;
}

Json ids_json(const std::vector<NodeId>& v) {
  Json a = Json::array();
  for (NodeId x : v) a.push_back(x + 1);
  return a;
}

Json arcs_json(const WeightedDigraph& g, const std::vector<ArcId>& arcs) {
  Json a = Json::array();
  for (ArcId id : arcs) {
    const Arc& x = g.arc(id);
    a.push_back({x.tail + 1, x.head + 1, weight_json(x.weight)});
  }
  return a;
}

Json edges_json(const UndirectedGraph& g, const std::vector<ArcId>& edges) {
  Json a = Json::array();
  for (ArcId id : edges) {
    const Edge& e = g.edges()[id];
    a.push_back({e.u + 1, e.v + 1, weight_json(e.weight)});
  }
  return a;
}

Json cert_json(const Certificate& c) {
  Json j{{"status", c.ok ? "valid" : "invalid"}};
  if (!c.ok) j["reason"] = c.reason;
  return j;
}

std::string normalized(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::string opt_string(const Json& o, const char* key, const std::string& dflt) {
  return o.contains(key) && o[key].is_string() ? o[key].get<std::string>() : dflt;
}

std::uint64_t opt_u64(const Json& o, const char* key, std::uint64_t dflt) {
  return o.contains(key) && o[key].is_number_unsigned() ? o[key].get<std::uint64_t>()
         : o.contains(key) && o[key].is_number_integer() ? static_cast<std::uint64_t>(std::max<std::int64_t>(0, o[key].get<std::int64_t>()))
                                                         : dflt;
}

bool opt_bool(const Json& o, const char* key) { return o.contains(key) && o[key].is_boolean() && o[key].get<bool>(); }

unsigned threads_of(const Json& o) {
  auto t = static_cast<unsigned>(opt_u64(o, "threads", 0));
  return t == 0 ? default_threads() : t;
}

std::uint64_t seed_of(const Json& o) { return opt_u64(o, "seed", 1); }

std::string token_of(const Json& v) {
  return v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>());
}

std::size_t node_count(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.node_count(); }, g);
}

std::optional<NodeId> terminal_named(const AnyGraph& g, const std::string& name) {
  return std::visit([&](const auto& x) { return x.terminal(name); }, g);
}

/// Explicit option, else the terminal of the same name, else `fallback`.
NodeId node_opt(const AnyGraph& g, const Json& o, const char* key, std::optional<NodeId> fallback) {
  if (o.contains(key) && !o[key].is_null()) return resolve_node(g, token_of(o[key]));
  if (auto t = terminal_named(g, key)) return *t;
  if (fallback) return *fallback;
  throw InvalidInput(std::string("missing node option '") + key + "'");
}

bool has_node_opt(const AnyGraph& g, const Json& o, const char* key) {
  return (o.contains(key) && !o[key].is_null()) || terminal_named(g, key).has_value();
}

const WeightedDigraph& digraph_of(const AnyGraph& g, WeightedDigraph& scratch) {
  if (auto d = std::get_if<WeightedDigraph>(&g)) return *d;
  scratch = std::get<UndirectedGraph>(g).bidirected();
  return scratch;
}

const UndirectedGraph& undirected_of(const AnyGraph& g) {
  if (auto u = std::get_if<UndirectedGraph>(&g)) return *u;
  throw InvalidInput("this problem needs an undirected graph");
}

OracleBudget budget_of(const Json& o) {
  OracleBudget b;
  b.max_nodes = opt_u64(o, "max_nodes", b.max_nodes);
  b.max_subsets = opt_u64(o, "max_subsets", b.max_subsets);
  if (o.contains("time_cap") && o["time_cap"].is_number()) b.time_cap_seconds = o["time_cap"].get<double>();
  return b;
}

std::vector<NodeId> terminals_opt(const AnyGraph& g, const Json& o) {
  std::vector<NodeId> out;
  if (o.contains("terminals"))
    for (const Json& t : o["terminals"]) out.push_back(resolve_node(g, token_of(t)));
  if (out.empty()) {
    for (const char* name : {"t1", "t2", "t3", "t4", "t5", "t6"})
      if (auto t = terminal_named(g, name)) out.push_back(*t);
  }
  if (out.size() < 2) throw InvalidInput("multiway cut needs at least two terminals");
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Oracle name matching a solver invocation.
std::string oracle_name_for(const AnyGraph& g, const std::string& problem, const std::string& variant,
                            const Json& o) {
  if (problem == "double_cut") {
    bool st = has_node_opt(g, o, "s") && has_node_opt(g, o, "t");
    return (variant == "node" ? std::string(st ? "st_node" : "node") : std::string(st ? "st_edge" : "edge")) +
           "_double_cut";
  }
  if (problem == "bicut") {
    if (variant == "st") return "st_edge_bicut";
    if (variant == "node") return "node_bicut";
    if (variant == "s_star") return "s_star_edge_bicut";
    return "edge_bicut";
  }
  if (problem == "lin3cut") return variant == "fixed" ? "lin3cut_fixed" : "lin3cut_star";
  if (problem == "sep_kcut") return "st_sep_kcut";
  if (problem == "multiway") return "node_multiway";
  if (problem == "node_3cut") return "node_3cut";
  throw InvalidInput("no oracle for problem '" + problem + "'");
}

struct OracleRun {
  OracleResult result;
  Json payload;
  Certificate cert;
};

OracleRun run_oracle(const AnyGraph& g, const std::string& name, const Json& o) {
  const OracleBudget b = budget_of(o);
  const bool raw_mode = opt_bool(o, "raw");
  WeightedDigraph scratch;
  OracleRun run;
  OracleResult& r = run.result;
  Json& p = run.payload;
  auto n = node_count(g);

  auto digraph_edge = [&](const WeightedDigraph& d) { p["removed_arcs"] = arcs_json(d, r.arcs); };

  if (name == "edge_double_cut" || name == "st_edge_double_cut") {
    const auto& d = digraph_of(g, scratch);
    if (name == "edge_double_cut") {
      r = raw_mode ? raw::edge_double_cut(d, b) : oracle_edge_double_cut(d, b);
      run.cert = certify_double_cut(d, r.arcs, NodeSet(n));
    } else {
      NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
      r = raw_mode ? raw::st_edge_double_cut(d, s, t, b) : oracle_st_edge_double_cut(d, s, t, b);
      run.cert = certify_st_edge_double_cut(d, r.arcs, s, t);
    }
    digraph_edge(d);
  } else if (name == "node_double_cut" || name == "st_node_double_cut") {
    const auto& d = digraph_of(g, scratch);
    auto costs = node_costs(d);
    if (name == "node_double_cut") {
      r = raw_mode ? raw::node_double_cut(d, costs, b) : oracle_node_double_cut(d, costs, b);
      run.cert = certify_double_cut(d, {}, r.nodes);
    } else {
      NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
      r = raw_mode ? raw::st_node_double_cut(d, s, t, costs, b) : oracle_st_node_double_cut(d, s, t, costs, b);
      run.cert = certify_st_node_double_cut(d, r.nodes, s, t);
    }
    p["removed_nodes"] = ids_json(r.nodes);
  } else if (name == "edge_bicut") {
    const auto& d = digraph_of(g, scratch);
    r = raw_mode ? raw::edge_bicut(d, b) : oracle_edge_bicut(d, b);
    if (raw_mode) {
      run.cert = {r.feasible, r.feasible ? "" : "no bicut"};
    } else {
      run.cert = certify_bicut_pair(d, r.a, r.b, r.arcs);
      p["A"] = ids_json(r.a);
      p["B"] = ids_json(r.b);
    }
    digraph_edge(d);
  } else if (name == "st_edge_bicut" || name == "s_star_edge_bicut") {
    const auto& d = digraph_of(g, scratch);
    NodeId s = node_opt(g, o, "s", 0);
    if (name == "st_edge_bicut") {
      NodeId t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
      r = raw_mode ? raw::st_edge_bicut(d, s, t, b) : oracle_st_edge_bicut(d, s, t, b);
      run.cert = certify_st_bicut(d, r.arcs, s, t);
    } else {
      r = raw_mode ? raw::s_star_edge_bicut(d, s, b) : oracle_s_star_edge_bicut(d, s, b);
      run.cert = r.feasible && !raw_mode ? certify_st_bicut(d, r.arcs, s, r.t)
                                         : Certificate{r.feasible, r.feasible ? "" : "no bicut"};
    }
    digraph_edge(d);
  } else if (name == "node_bicut") {
    const auto& d = digraph_of(g, scratch);
    r = raw_mode ? raw::node_bicut(d, node_costs(d), b) : oracle_node_bicut(d, node_costs(d), b);
    run.cert = raw_mode ? Certificate{r.feasible, r.feasible ? "" : "no bicut"}
                        : certify_node_bicut(d, r.nodes, r.s, r.t);
    p["removed_nodes"] = ids_json(r.nodes);
  } else if (name == "lin3cut_fixed" || name == "lin3cut_star") {
    const auto& d = digraph_of(g, scratch);
    NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
    if (name == "lin3cut_fixed") {
      NodeId rr = node_opt(g, o, "r", 1);
      r = raw_mode ? raw::lin3cut_fixed(d, s, rr, t, b) : oracle_lin3cut_fixed(d, s, rr, t, b);
      run.cert = certify_lin3cut(d, r.arcs, s, rr, t);
    } else {
      r = raw_mode ? raw::lin3cut_star(d, s, t, b) : oracle_lin3cut_star(d, s, t, b);
      run.cert = raw_mode ? Certificate{r.feasible, ""} : certify_lin3cut(d, r.arcs, s, r.r, t);
    }
    digraph_edge(d);
  } else if (name == "node_3cut") {
    const auto& u = undirected_of(g);
    r = raw_mode ? raw::node_3cut(u, node_costs(u), b) : oracle_node_3cut(u, node_costs(u), b);
    run.cert = certify_node_3cut(u, r.nodes);
    p["removed_nodes"] = ids_json(r.nodes);
  } else if (name == "node_multiway") {
    const auto& u = undirected_of(g);
    auto terms = terminals_opt(g, o);
    r = raw_mode ? raw::node_multiway(u, terms, node_costs(u), b) : oracle_node_multiway(u, terms, node_costs(u), b);
    run.cert = certify_node_multiway(u, r.nodes, terms);
    p["removed_nodes"] = ids_json(r.nodes);
  } else if (name == "st_sep_kcut") {
    const auto& u = undirected_of(g);
    NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
    int k = static_cast<int>(opt_u64(o, "k", 3));
    r = raw_mode ? raw::st_sep_kcut(u, s, t, k, b) : oracle_st_sep_kcut(u, s, t, k, b);
    if (raw_mode) {
      run.cert = {r.feasible, r.feasible ? "" : "no separating cut"};
      p["removed_edges"] = edges_json(u, r.arcs);
    } else {
      run.cert = r.feasible ? certify_sep_kcut(u, r.partition, s, t, k, r.value) : Certificate{false, "none"};
      Json blocks = Json::array();
      for (int x : r.partition) blocks.push_back(x + 1);
      p["blocks"] = blocks;
      p["removed_edges"] = edges_json(u, r.arcs);
    }
  } else {
    throw InvalidInput("unknown oracle problem '" + name + "'");
  }
  if (!r.feasible) throw Infeasible("no feasible solution exists");
  return run;
}

void attach_oracle(Json& rep, const AnyGraph& g, const std::string& problem, const std::string& variant,
                   const Json& o, Weight value) {
  if (!opt_bool(o, "oracle")) return;
  Json oo = o;
  oo.erase("raw");
  OracleRun run = run_oracle(g, oracle_name_for(g, problem, variant, o), oo);
  rep["oracle_value"] = weight_json(run.result.value);
  if (run.result.value > 0 && run.result.value != kInfinite && value != kInfinite)
    rep["ratio"] = static_cast<double>(value) / static_cast<double>(run.result.value);
  else if (run.result.value == 0 && value == 0)
    rep["ratio"] = 1.0;
}

}  // namespace

Json solve_report(const AnyGraph& g, const std::string& problem_in, const Json& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string problem = normalized(problem_in);
  const unsigned threads = threads_of(o);
  const std::uint64_t seed = seed_of(o);
  const std::size_t n = node_count(g);
  WeightedDigraph scratch;
  Json rep;
  rep["problem"] = problem_in;
  rep["seed"] = seed;
  Json sol = Json::object();
  Weight value = kInfinite;
  std::string variant;

  if (problem == "double_cut") {
    variant = normalized(opt_string(o, "variant", "edge"));
    const auto& d = digraph_of(g, scratch);
    bool st = has_node_opt(g, o, "s") && has_node_opt(g, o, "t");
    DoubleCutSolution s;
    if (variant == "edge") {
      if (st) {
        s = st_edge_double_cut_exact(d, node_opt(g, o, "s", {}), node_opt(g, o, "t", {}));
      } else {
        s = edge_double_cut_exact(d, threads);
      }
      rep["method"] = "max-flow";
      sol["removed_arcs"] = arcs_json(d, s.removed_arcs);
      rep["certificate"] = cert_json(certify_st_edge_double_cut(d, s.removed_arcs, s.s, s.t));
    } else if (variant == "node") {
      auto costs = node_costs(d);
      s = st ? st_node_double_cut_2approx(d, node_opt(g, o, "s", {}), node_opt(g, o, "t", {}), costs)
             : node_double_cut_2approx(d, costs, threads);
      rep["method"] = "path-blocking-lp";
      sol["removed_nodes"] = ids_json(s.removed_nodes);
      rep["certificate"] = cert_json(certify_st_node_double_cut(d, s.removed_nodes, s.s, s.t));
      if (s.lp_value) rep["lp_value"] = *s.lp_value;
    } else {
      throw InvalidInput("double-cut variant must be edge or node");
    }
    sol["s"] = s.s + 1;
    sol["t"] = s.t + 1;
    sol["S"] = ids_json(s.S);
    sol["T"] = ids_json(s.T);
    value = s.cost;
  } else if (problem == "bicut") {
    variant = normalized(opt_string(o, "variant", "global"));
    const auto& d = digraph_of(g, scratch);
    if (variant == "node") {
      NodeBicutSolution s = node_bicut_2approx(d, node_costs(d), threads);
      rep["method"] = "split-graph";
      sol["removed_nodes"] = ids_json(s.removed);
      sol["s"] = s.s + 1;
      sol["t"] = s.t + 1;
      rep["certificate"] = cert_json(certify_node_bicut(d, s.removed, s.s, s.t));
      value = s.cost;
    } else {
      BicutSolution s;
      if (variant == "global") {
        GlobalBicutOptions go;
        go.threads = threads;
        go.seed = seed;
        if (o.contains("tuple_limit")) go.tuple_limit = opt_u64(o, "tuple_limit", 0);
        s = approximate_global_bicut(d, go);
        rep["tuples_evaluated"] = s.tuples_evaluated;
        rep["tuples_total"] = s.tuples_total;
        if (!s.tuple.empty()) sol["tuple"] = ids_json(s.tuple);
      } else if (variant == "st") {
        s = st_edge_bicut_2approx(d, node_opt(g, o, "s", 0), node_opt(g, o, "t", static_cast<NodeId>(n - 1)));
      } else if (variant == "s_star") {
        s = s_star_edge_bicut_2approx(d, node_opt(g, o, "s", 0));
      } else {
        throw InvalidInput("bicut variant must be global, st, node or s-star");
      }
      if (!s.found()) throw Infeasible("no finite bicut exists");
      rep["method"] = s.method;
      sol["A"] = ids_json(s.pair.a);
      sol["B"] = ids_json(s.pair.b);
      sol["removed_arcs"] = arcs_json(d, s.removed_arcs);
      rep["certificate"] = cert_json(certify_bicut_pair(d, s.pair.a, s.pair.b, s.removed_arcs));
      value = s.cost;
    }
  } else if (problem == "lin3cut") {
    variant = normalized(opt_string(o, "variant", "star"));
    const auto& d = digraph_of(g, scratch);
    NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
    Lin3CutSolution l;
    if (variant == "fixed") {
      l = lin3cut_fixed_2approx(d, s, node_opt(g, o, "r", 1), t);
      rep["method"] = "two-cuts";
    } else if (variant == "star") {
      l = lin3cut_star_32approx(d, s, t);
      rep["method"] = "chain";
      rep["chain_length"] = l.chain_length;
    } else {
      throw InvalidInput("lin3cut variant must be star or fixed");
    }
    if (l.cost == kInfinite) throw Infeasible("every linear 3-cut is infinite");
    sol["s"] = l.s + 1;
    sol["r"] = l.r + 1;
    sol["t"] = l.t + 1;
    sol["A"] = ids_json(l.a);
    sol["B"] = ids_json(l.b);
    sol["removed_arcs"] = arcs_json(d, l.removed_arcs);
    rep["certificate"] = cert_json(certify_lin3cut(d, l.removed_arcs, l.s, l.r, l.t));
    value = l.cost;
  } else if (problem == "sep_kcut") {
    const auto& u = undirected_of(g);
    NodeId s = node_opt(g, o, "s", 0), t = node_opt(g, o, "t", static_cast<NodeId>(n - 1));
    int k = static_cast<int>(opt_u64(o, "k", 3));
    KcutOptions ko;
    ko.seed = seed;
    ko.threads = threads;
    if (o.contains("trials")) ko.trials = opt_u64(o, "trials", 1);
    std::string mode = opt_string(o, "mode", "auto");
    ko.mode = mode == "exact" ? EnumerationMode::exact
              : mode == "monte-carlo" || mode == "monte_carlo" ? EnumerationMode::monte_carlo
                                                                : EnumerationMode::automatic;
    Partition p = st_sep_kcut(u, s, t, k, ko);
    rep["method"] = "enumerate-and-split";
    Json blocks = Json::array();
    for (int x : p.block_of) blocks.push_back(x + 1);
    sol["blocks"] = blocks;
    rep["certificate"] = cert_json(certify_sep_kcut(u, p.block_of, s, t, k, p.gamma));
    value = p.gamma;
  } else if (problem == "kcut_enum") {
    const auto& u = undirected_of(g);
    int k = static_cast<int>(opt_u64(o, "k", 2));
    KcutOptions ko;
    ko.seed = seed;
    ko.threads = threads;
    if (o.contains("trials")) ko.trials = opt_u64(o, "trials", 1);
    std::string mode = opt_string(o, "mode", "auto");
    ko.mode = mode == "exact" ? EnumerationMode::exact
              : mode == "monte-carlo" || mode == "monte_carlo" ? EnumerationMode::monte_carlo
                                                                : EnumerationMode::automatic;
    EnumeratedCuts e = enumerate_2approx_kcuts(u, k, ko);
    rep["method"] = e.exact ? "exact" : "contraction";
    rep["trials"] = e.trials;
    Json parts = Json::array();
    bool all_ok = true;
    for (const Partition& p : e.partitions) {
      Json blocks = Json::array();
      for (int x : p.block_of) blocks.push_back(x + 1);
      parts.push_back({{"gamma", p.gamma}, {"blocks", blocks}});
      all_ok &= partition_value(u, p.block_of) == p.gamma;
    }
    sol["partitions"] = parts;
    sol["count"] = e.partitions.size();
    rep["certificate"] = cert_json({all_ok, all_ok ? "" : "stored gamma differs from recomputed value"});
    value = e.best;
  } else if (problem == "multiway") {
    const auto& u = undirected_of(g);
    auto terms = terminals_opt(g, o);
    MultiwaySolution m = node_multiway_cut_approx(u, terms, node_costs(u));
    rep["method"] = "lp-round";
    rep["lp_value"] = m.lp_value;
    sol["removed_nodes"] = ids_json(m.removed);
    sol["terminals"] = ids_json(terms);
    rep["certificate"] = cert_json(certify_node_multiway(u, m.removed, terms));
    value = m.cost;
  } else if (problem == "node_3cut") {
    const auto& u = undirected_of(g);
    variant = normalized(opt_string(o, "method", "lp"));
    NodeSet removed;
    if (variant == "via_doublecut") {
      Node3CutResult r = node3cut_via_doublecut(u, node_costs(u), [&](const WeightedDigraph& d, const auto& c) {
        return node_double_cut_2approx(d, c, threads).removed_nodes;
      });
      removed = r.removed;
      value = r.cost;
      rep["method"] = "via-doublecut";
    } else {
      MultiwaySolution m = node_3cut_approx(u, node_costs(u), threads);
      removed = m.removed;
      value = m.cost;
      rep["method"] = "lp-round";
      rep["lp_value"] = m.lp_value;
    }
    sol["removed_nodes"] = ids_json(removed);
    rep["certificate"] = cert_json(certify_node_3cut(u, removed));
    variant.clear();
  } else {
    throw InvalidInput("unknown problem '" + problem_in + "'");
  }

  if (!variant.empty()) rep["variant"] = variant;
  rep["value"] = weight_json(value);
  rep["solution"] = sol;
  if (problem != "kcut_enum") attach_oracle(rep, g, problem, variant, o, value);
  rep["wall_time_ms"] = ms_since(t0);
  return rep;
}

Json oracle_report(const AnyGraph& g, const std::string& problem, const Json& o) {
  const auto t0 = std::chrono::steady_clock::now();
  OracleRun run = run_oracle(g, normalized(problem), o);
  Json rep;
  rep["problem"] = problem;
  rep["method"] = opt_bool(o, "raw") ? "raw-oracle" : "oracle";
  rep["value"] = weight_json(run.result.value);
  rep["solution"] = run.payload;
  rep["certificate"] = cert_json(run.cert);
  rep["wall_time_ms"] = ms_since(t0);
  return rep;
}

std::vector<int> parts_for(const UndirectedGraph& g, int k, const Json& o) {
  if (o.contains("parts") && o["parts"].is_array() && !o["parts"].empty()) {
    std::vector<int> parts;
    for (const Json& p : o["parts"]) parts.push_back(p.get<int>() - 1);
    return parts;
  }
  if (g.is_regular(static_cast<std::size_t>(k))) return kregular_partition(g, k, seed_of(o));
  // Greedy in id order, then a fallback over seeded orders.
  const std::size_t n = g.node_count();
  std::mt19937_64 rng(seed_of(o));
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (attempt > 0)
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    std::vector<int> color(n, -1);
    bool ok = true;
    for (NodeId v : order) {
      std::vector<char> used(static_cast<std::size_t>(k), 0);
      for (ArcId e : g.incident(v)) {
        int c = color[g.other(e, v)];
        if (c >= 0) used[c] = 1;
      }
      int c = 0;
      while (c < k && used[c]) ++c;
      if (c == k) {
        ok = false;
        break;
      }
      color[v] = c;
    }
    if (ok) return color;
  }
  throw InvalidInput("could not find a " + std::to_string(k) + "-partition; pass parts explicitly");
}

namespace {

GadgetKind gadget_kind(const std::string& kind) {
  std::string k = normalized(kind);
  if (k == "3cut" || k == "node3cut" || k == "node_3cut") return GadgetKind::node3cut;
  if (k == "bicut" || k == "node_bicut") return GadgetKind::node_bicut;
  if (k == "s_star" || k == "s_star_bicut") return GadgetKind::s_star_bicut;
  throw InvalidInput("gadget kind must be 3cut, bicut or s-star");
}

int parts_needed(GadgetKind k) { return k == GadgetKind::node_bicut ? 4 : 3; }

}  // namespace

AnyGraph reduce(const AnyGraph& g, const std::string& kind, const Json& o) {
  const auto& u = undirected_of(g);
  GadgetKind gk = gadget_kind(kind);
  ReductionMap m = build_reduction(gk, u, parts_for(u, parts_needed(gk), o));
  if (m.undirected) return *m.undirected;
  return *m.digraph;
}

Json verify_report(const AnyGraph* g, const std::string& what, const Json& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Json rep;
  rep["check"] = what;
  const OracleBudget b = budget_of(o);
  bool ok = false;
  if (what == "gadget") {
    if (!g) throw InvalidInput("gadget check needs an input graph");
    const auto& u = undirected_of(*g);
    std::string kind = opt_string(o, "kind", "3cut");
    GadgetKind gk = gadget_kind(kind);
    auto parts = parts_for(u, parts_needed(gk), o);
    ReductionMap m = build_reduction(gk, u, parts);
    ReductionCheck c = verify_reduction(u, m, b);
    rep["kind"] = kind;
    rep["source_opt"] = weight_json(c.source_opt);
    rep["target_opt"] = weight_json(c.target_opt);
    rep["back_feasible"] = c.back_feasible;
    rep["back_cost"] = weight_json(c.back_cost);
    rep["forward_feasible"] = c.forward_feasible;
    rep["forward_cost"] = weight_json(c.forward_cost);
    Json pj = Json::array();
    for (int p : parts) pj.push_back(p + 1);
    rep["parts"] = pj;
    ok = c.ok();
  } else if (what == "dab") {
    int a = static_cast<int>(opt_u64(o, "a", 2)), bb = static_cast<int>(opt_u64(o, "b", 4));
    DabInstance inst = build_dab(a, bb);
    DabReport d = check_dab_properties(inst, b);
    bool uniform = dab_uniform_solution_feasible(inst);
    bool count = inst.graph.arc_count() == dab_expected_arc_count(a, bb);
    rep["a"] = a;
    rep["b"] = bb;
    rep["nodes"] = inst.graph.node_count();
    rep["arcs"] = inst.graph.arc_count();
    rep["arc_count_matches"] = count;
    rep["property1"] = d.property1;
    if (!d.violations.empty()) rep["violations"] = d.violations;
    if (d.property2_checked) {
      rep["property2"] = d.property2;
      rep["min_blocking"] = weight_json(d.min_blocking);
      rep["blocking_bound"] = 2 * a - 1;
    } else {
      rep["property2"] = "skipped";
      rep["note"] = d.note;
    }
    rep["uniform_lp_feasible"] = uniform;
    rep["uniform_lp_value"] = static_cast<double>(a) * bb / inst.r;
    ok = d.property1 && (!d.property2_checked || d.property2) && uniform && count;
  } else if (what == "skeleton") {
    SkeletonReport s = check_skeleton(build_global_skeleton(), 0, 1);
    rep["item1"] = s.item1;
    rep["item2"] = s.item2;
    rep["item3"] = s.item3;
    if (!s.details.empty()) rep["details"] = s.details;
    ok = s.ok();
  } else {
    throw InvalidInput("verify target must be gadget, dab or skeleton");
  }
  rep["ok"] = ok;
  rep["wall_time_ms"] = ms_since(t0);
  return rep;
}

Generated generate(const std::string& family_in, const Json& o) {
  const std::string family = normalized(family_in);
  const std::uint64_t seed = seed_of(o);
  const std::size_t n = opt_u64(o, "n", 6);
  const double p = o.contains("p") && o["p"].is_number() ? o["p"].get<double>() : 0.4;
  const Weight wmax = opt_u64(o, "wmax", 3);
  Generated out{UndirectedGraph(), {}};
  if (family == "digraph") {
    out.graph = random_digraph(n, p, wmax, seed);
  } else if (family == "graph") {
    out.graph = random_graph(n, p, wmax, seed);
  } else if (family == "partite") {
    PartiteGraph pg = random_partite(n, static_cast<int>(opt_u64(o, "k", 3)), p, seed);
    out.graph = pg.graph;
    out.parts = pg.parts;
  } else if (family == "cycle") {
    out.graph = cycle_graph(n);
  } else if (family == "path") {
    out.graph = path_graph(n);
  } else if (family == "star") {
    out.graph = star_graph(n);
  } else if (family == "complete") {
    out.graph = complete_graph(n);
  } else if (family == "prism") {
    out.graph = prism_graph();
  } else if (family == "petersen") {
    out.graph = petersen_graph();
  } else if (family == "bicycle") {
    out.graph = bidirected_cycle(n);
  } else if (family == "dab") {
    out.graph = build_dab(static_cast<int>(opt_u64(o, "a", 2)), static_cast<int>(opt_u64(o, "b", 4))).graph;
  } else if (family == "skeleton") {
    out.graph = build_global_skeleton();
  } else {
    throw InvalidInput("unknown family '" + family_in + "'");
  }
  return out;
}

std::string emit_with_parts(const AnyGraph& g, const std::vector<int>& parts, Format f) {
  if (f == Format::text || parts.empty()) return emit(g, f);
  Json j = Json::parse(emit_json(g));
  Json pj = Json::array();
  for (int p : parts) pj.push_back(p + 1);
  j["parts"] = pj;
  return j.dump(2) + "\n";
}

}  // namespace cutkit

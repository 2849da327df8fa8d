#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutkit/cutkit.h"

using nlohmann::json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { cutkit_string_free(p); }
};

struct GraphHandle {
  cutkit_graph* g = nullptr;
  ~GraphHandle() { cutkit_graph_free(g); }
};

int exit_code(cutkit_status s) {
  switch (s) {
    case CUTKIT_OK: return 0;
    case CUTKIT_INVALID_INPUT:
    case CUTKIT_PARSE_ERROR: return 2;
    case CUTKIT_INFEASIBLE: return 3;
    case CUTKIT_BUDGET_EXCEEDED: return 4;
    default: return 1;
  }
}

const char* status_name(cutkit_status s) {
  switch (s) {
    case CUTKIT_INVALID_INPUT: return "invalid_input";
    case CUTKIT_PARSE_ERROR: return "parse_error";
    case CUTKIT_INFEASIBLE: return "infeasible";
    case CUTKIT_BUDGET_EXCEEDED: return "budget_exceeded";
    case CUTKIT_NUMERICAL_ERROR: return "numerical_error";
    default: return "internal_error";
  }
}

int fail(cutkit_status s) {
  json j{{"status", status_name(s)}, {"reason", cutkit_last_error()}};
  if (s == CUTKIT_INFEASIBLE || s == CUTKIT_BUDGET_EXCEEDED)
    std::cout << j.dump() << "\n";
  else
    std::cerr << "error: " << cutkit_last_error() << "\n";
  return exit_code(s);
}

cutkit_status load(const std::string& path, GraphHandle& h) {
  if (path != "-") return cutkit_graph_load(path.c_str(), &h.g);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return cutkit_graph_parse(text.c_str(), &h.g);
}

void print_text_report(const json& r, const std::string& indent = "") {
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it->is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_text_report(*it, indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
}

int write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

int print_report(cutkit_status s, const Owned& rep, const std::string& format) {
  if (s != CUTKIT_OK) return fail(s);
  json j = json::parse(rep.p);
  if (format == "text")
    print_text_report(j);
  else
    std::cout << j.dump(2) << "\n";
  return 0;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CUTKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric CUTKIT_SEED\n";
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutkit: cut problems on small graphs, approximations and exhaustive oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", cutkit_version());

  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t seed = default_seed();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", seed, "Random seed (default $CUTKIT_SEED or 1)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance or a vertex-cover gadget");
  std::string family, gen_out, gadget_from, gadget_kind = "3cut", gen_parts;
  std::size_t gen_n = 6;
  double gen_p = 0.4;
  std::uint64_t gen_wmax = 3;
  int gen_k = 3, gen_a = 2, gen_b = 4;
  gen->add_option("family", family,
                  "digraph, graph, partite, cycle, path, star, complete, prism, petersen, bicycle, dab, skeleton, "
                  "gadget");
  gen->add_option("-n,--nodes", gen_n, "Node count");
  gen->add_option("-p,--density", gen_p, "Edge probability");
  gen->add_option("--wmax", gen_wmax, "Largest random weight");
  gen->add_option("-k,--parts", gen_k, "Part count for partite graphs");
  gen->add_option("-a", gen_a, "D_{a,b} rows");
  gen->add_option("-b", gen_b, "D_{a,b} columns");
  gen->add_option("--from", gadget_from, "Source graph for the gadget family");
  gen->add_option("--kind", gadget_kind, "Gadget kind")->check(CLI::IsMember({"3cut", "bicut", "s-star"}));
  gen->add_option("--part-labels", gen_parts, "JSON file with a 1-based \"parts\" array");
  gen->add_option("-o,--output", gen_out, "Output file");

  // solve / oracle share node and budget options
  std::string problem, input, variant, method, s_tok, t_tok, r_tok, mode;
  std::vector<std::string> terminals;
  int k = 0;
  std::optional<std::uint64_t> trials, tuple_limit, max_nodes, max_subsets;
  std::optional<double> time_cap;
  bool with_oracle = false, raw = false;

  auto* solve = app.add_subcommand("solve", "Run an approximation or exact solver");
  solve->add_option("problem", problem,
                    "double-cut, bicut, lin3cut, sep-kcut, kcut-enum, multiway, node-3cut")
      ->required();
  solve->add_option("-i,--input", input, "Graph file ('-' for stdin)")->required();
  solve->add_option("--variant", variant, "Problem variant");
  solve->add_option("--method", method, "Solver method");
  solve->add_option("-s", s_tok, "Source node");
  solve->add_option("-t", t_tok, "Sink node");
  solve->add_option("-r", r_tok, "Middle node");
  solve->add_option("-k,--k", k, "Number of parts");
  solve->add_option("--terminals", terminals, "Multiway terminals");
  solve->add_option("--trials", trials, "Contraction trials");
  solve->add_option("--tuple-limit", tuple_limit, "Sample this many tuples in the global bicut loop");
  solve->add_option("--mode", mode, "k-cut enumeration mode")
      ->check(CLI::IsMember({"auto", "exact", "monte-carlo"}));
  solve->add_flag("--oracle", with_oracle, "Also run the exhaustive oracle");
  solve->add_option("--max-nodes", max_nodes, "Oracle node budget");
  solve->add_option("--max-subsets", max_subsets, "Oracle subset budget");
  solve->add_option("--time-cap", time_cap, "Oracle time cap in seconds");

  auto* oracle = app.add_subcommand("oracle", "Run an exhaustive oracle");
  oracle->add_option("problem", problem,
                     "edge-double-cut, st-edge-double-cut, node-double-cut, st-node-double-cut, edge-bicut, "
                     "st-edge-bicut, node-bicut, s-star-edge-bicut, lin3cut-fixed, lin3cut-star, node-3cut, "
                     "node-multiway, st-sep-kcut")
      ->required();
  oracle->add_option("-i,--input", input, "Graph file ('-' for stdin)")->required();
  oracle->add_option("-s", s_tok, "Source node");
  oracle->add_option("-t", t_tok, "Sink node");
  oracle->add_option("-r", r_tok, "Middle node");
  oracle->add_option("-k,--k", k, "Number of parts");
  oracle->add_option("--terminals", terminals, "Multiway terminals");
  oracle->add_flag("--raw", raw, "Enumerate raw arc or node subsets");
  oracle->add_option("--max-nodes", max_nodes, "Node budget");
  oracle->add_option("--max-subsets", max_subsets, "Subset budget");
  oracle->add_option("--time-cap", time_cap, "Time cap in seconds");

  auto* verify = app.add_subcommand("verify", "Check gadget, D_{a,b} or skeleton properties");
  std::string what, verify_parts;
  int va = 2, vb = 4;
  verify->add_option("what", what, "gadget, dab, skeleton")
      ->required()
      ->check(CLI::IsMember({"gadget", "dab", "skeleton"}));
  verify->add_option("-i,--input", input, "Source graph for gadget checks");
  verify->add_option("--kind", gadget_kind, "Gadget kind")->check(CLI::IsMember({"3cut", "bicut", "s-star"}));
  verify->add_option("-a", va, "D_{a,b} rows");
  verify->add_option("-b", vb, "D_{a,b} columns");
  verify->add_option("--part-labels", verify_parts, "JSON file with a 1-based \"parts\" array");
  verify->add_option("--max-nodes", max_nodes, "Oracle node budget");

  auto* experiment = app.add_subcommand("experiment", "Print a CSV table");
  std::string suite;
  std::uint64_t count = 20, nmin = 3, nmax = 6;
  experiment->add_option("suite", suite, "ratios, gap, gadgets")
      ->required()
      ->check(CLI::IsMember({"ratios", "gap", "gadgets"}));
  experiment->add_option("--count", count, "Instances per problem");
  experiment->add_option("--nmin", nmin, "Smallest instance");
  experiment->add_option("--nmax", nmax, "Largest instance");
  experiment->add_option("-o,--output", gen_out, "Output file");

  auto* fmt = app.add_subcommand("fmt", "Convert between text and JSON graph formats");
  std::string fmt_out;
  fmt->add_option("-i,--input", input, "Graph file ('-' for stdin)")->required();
  fmt->add_option("-o,--output", fmt_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json opts = json::object();
  opts["seed"] = seed;
  if (threads) opts["threads"] = threads;
  if (max_nodes) opts["max_nodes"] = *max_nodes;
  if (max_subsets) opts["max_subsets"] = *max_subsets;
  if (time_cap) opts["time_cap"] = *time_cap;
  if (!s_tok.empty()) opts["s"] = s_tok;
  if (!t_tok.empty()) opts["t"] = t_tok;
  if (!r_tok.empty()) opts["r"] = r_tok;
  if (k) opts["k"] = k;
  if (!terminals.empty()) opts["terminals"] = terminals;

  auto read_parts = [&](const std::string& path) -> int {
    if (path.empty()) return 0;
    std::ifstream f(path);
    if (!f) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return 2;
    }
    try {
      json j = json::parse(f);
      opts["parts"] = j.is_array() ? j : j.at("parts");
    } catch (const json::exception& e) {
      std::cerr << "error: bad parts file: " << e.what() << "\n";
      return 2;
    }
    return 0;
  };

  if (*gen) {
    GraphHandle h;
    if (family.empty()) {
      std::cerr << "error: gen needs a family\n";
      return 2;
    }
    if (int rc = read_parts(gen_parts)) return rc;
    cutkit_status st;
    if (family == "gadget") {
      if (gadget_from.empty()) {
        std::cerr << "error: gen gadget needs --from\n";
        return 2;
      }
      GraphHandle src;
      if ((st = load(gadget_from, src)) != CUTKIT_OK) return fail(st);
      st = cutkit_reduce(src.g, gadget_kind.c_str(), opts.dump().c_str(), &h.g);
    } else {
      opts["n"] = gen_n;
      opts["p"] = gen_p;
      opts["wmax"] = gen_wmax;
      opts["k"] = gen_k;
      opts["a"] = gen_a;
      opts["b"] = gen_b;
      st = cutkit_generate(family.c_str(), opts.dump().c_str(), &h.g);
    }
    if (st != CUTKIT_OK) return fail(st);
    Owned text;
    if ((st = cutkit_graph_emit(h.g, format == "json", &text.p)) != CUTKIT_OK) return fail(st);
    return write_output(text.p, gen_out);
  }

  if (*solve || *oracle) {
    GraphHandle h;
    if (auto st = load(input, h)) return fail(st);
    if (!variant.empty()) opts["variant"] = variant;
    if (!method.empty()) opts["method"] = method;
    if (!mode.empty()) opts["mode"] = mode;
    if (trials) opts["trials"] = *trials;
    if (tuple_limit) opts["tuple_limit"] = *tuple_limit;
    if (with_oracle) opts["oracle"] = true;
    if (raw) opts["raw"] = true;
    Owned rep;
    auto st = *solve ? cutkit_solve(h.g, problem.c_str(), opts.dump().c_str(), &rep.p)
                     : cutkit_oracle(h.g, problem.c_str(), opts.dump().c_str(), &rep.p);
    return print_report(st, rep, format);
  }

  if (*verify) {
    GraphHandle h;
    if (!input.empty())
      if (auto st = load(input, h)) return fail(st);
    if (int rc = read_parts(verify_parts)) return rc;
    opts["kind"] = gadget_kind;
    opts["a"] = va;
    opts["b"] = vb;
    Owned rep;
    auto st = cutkit_verify(h.g, what.c_str(), opts.dump().c_str(), &rep.p);
    int rc = print_report(st, rep, format);
    if (rc == 0 && !json::parse(rep.p).value("ok", false)) return 1;
    return rc;
  }

  if (*experiment) {
    opts["count"] = count;
    opts["nmin"] = nmin;
    opts["nmax"] = nmax;
    Owned csv;
    if (auto st = cutkit_experiment(suite.c_str(), opts.dump().c_str(), &csv.p)) return fail(st);
    return write_output(csv.p, gen_out);
  }

  if (*fmt) {
    GraphHandle h;
    if (auto st = load(input, h)) return fail(st);
    Owned text;
    if (auto st = cutkit_graph_emit(h.g, format == "json", &text.p)) return fail(st);
    return write_output(text.p, fmt_out);
  }
  return 2;
}

#include "cutkit/cutkit.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "cutkit/error.hpp"
#include "cutkit/io.hpp"
#include "cutkit/report.hpp"

struct cutkit_graph {
  cutkit::AnyGraph graph;
  std::vector<int> parts;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cutkit::Json options(const char* text) {
  if (!text || !*text) return cutkit::Json::object();
  cutkit::Json j;
  try {
    j = cutkit::Json::parse(text);
  } catch (const cutkit::Json::exception& e) {
    throw cutkit::InvalidInput(std::string("bad options: ") + e.what());
  }
  if (!j.is_object()) throw cutkit::InvalidInput("options must be a JSON object");
  return j;
}

cutkit::Json with_parts(cutkit::Json o, const cutkit_graph* g) {
  if (g && !g->parts.empty() && !o.contains("parts")) {
    cutkit::Json p = cutkit::Json::array();
    for (int x : g->parts) p.push_back(x + 1);
    o["parts"] = p;
  }
  return o;
}

template <class F>
cutkit_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return CUTKIT_OK;
  } catch (const cutkit::Error& e) {
    last_error = e.what();
    return static_cast<cutkit_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const cutkit::Json::exception& e) {
    last_error = e.what();
    return CUTKIT_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return CUTKIT_INTERNAL_ERROR;
}

cutkit_status need(const void* p, const char* what) {
  if (p) return CUTKIT_OK;
  last_error = std::string(what) + " is null";
  return CUTKIT_INVALID_INPUT;
}

}  // namespace

extern "C" {

const char* cutkit_last_error(void) { return last_error.c_str(); }

const char* cutkit_version(void) { return "0.1.0"; }

cutkit_status cutkit_graph_parse(const char* text, cutkit_graph** out) {
  if (auto s = need(text, "text")) return s;
  if (auto s = need(out, "out")) return s;
  return guard([&] {
    auto g = std::make_unique<cutkit_graph>(cutkit_graph{cutkit::parse_graph(text), {}});
    g->parts = cutkit::parse_parts_json(text);
    *out = g.release();
  });
}

cutkit_status cutkit_graph_load(const char* path, cutkit_graph** out) {
  if (auto s = need(path, "path")) return s;
  if (auto s = need(out, "out")) return s;
  return guard([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cutkit::InvalidInput(std::string("cannot open '") + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto g = std::make_unique<cutkit_graph>(cutkit_graph{cutkit::parse_graph(text), {}});
    g->parts = cutkit::parse_parts_json(text);
    *out = g.release();
  });
}

void cutkit_graph_free(cutkit_graph* g) { delete g; }

size_t cutkit_graph_node_count(const cutkit_graph* g) {
  if (!g) return 0;
  return std::visit([](const auto& x) { return x.node_count(); }, g->graph);
}

int cutkit_graph_is_directed(const cutkit_graph* g) {
  return g && std::holds_alternative<cutkit::WeightedDigraph>(g->graph) ? 1 : 0;
}

cutkit_status cutkit_graph_emit(const cutkit_graph* g, int as_json, char** out) {
  if (auto s = need(g, "graph")) return s;
  if (auto s = need(out, "out")) return s;
  return guard([&] {
    *out = dup(cutkit::emit_with_parts(g->graph, g->parts, as_json ? cutkit::Format::json : cutkit::Format::text));
  });
}

void cutkit_string_free(char* s) { std::free(s); }

cutkit_status cutkit_solve(const cutkit_graph* g, const char* problem, const char* options_json, char** report) {
  if (auto s = need(g, "graph")) return s;
  if (auto s = need(problem, "problem")) return s;
  if (auto s = need(report, "report")) return s;
  return guard([&] { *report = dup(cutkit::solve_report(g->graph, problem, options(options_json)).dump(2)); });
}

cutkit_status cutkit_oracle(const cutkit_graph* g, const char* problem, const char* options_json, char** report) {
  if (auto s = need(g, "graph")) return s;
  if (auto s = need(problem, "problem")) return s;
  if (auto s = need(report, "report")) return s;
  return guard([&] { *report = dup(cutkit::oracle_report(g->graph, problem, options(options_json)).dump(2)); });
}

cutkit_status cutkit_verify(const cutkit_graph* g, const char* what, const char* options_json, char** report) {
  if (auto s = need(what, "what")) return s;
  if (auto s = need(report, "report")) return s;
  return guard([&] {
    *report = dup(cutkit::verify_report(g ? &g->graph : nullptr, what, with_parts(options(options_json), g)).dump(2));
  });
}

cutkit_status cutkit_generate(const char* family, const char* options_json, cutkit_graph** out) {
  if (auto s = need(family, "family")) return s;
  if (auto s = need(out, "out")) return s;
  return guard([&] {
    cutkit::Generated gen = cutkit::generate(family, options(options_json));
    *out = new cutkit_graph{std::move(gen.graph), std::move(gen.parts)};
  });
}

cutkit_status cutkit_reduce(const cutkit_graph* g, const char* kind, const char* options_json, cutkit_graph** out) {
  if (auto s = need(g, "graph")) return s;
  if (auto s = need(kind, "kind")) return s;
  if (auto s = need(out, "out")) return s;
  return guard([&] {
    *out = new cutkit_graph{cutkit::reduce(g->graph, kind, with_parts(options(options_json), g)), {}};
  });
}

cutkit_status cutkit_experiment(const char* suite, const char* options_json, char** csv) {
  if (auto s = need(suite, "suite")) return s;
  if (auto s = need(csv, "csv")) return s;
  return guard([&] { *csv = dup(cutkit::run_experiment(suite, options(options_json))); });
}

}  // extern "C"

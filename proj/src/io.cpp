#include "cutkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cutkit/error.hpp"

namespace cutkit {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  if (!tok.empty() && tok[0] == '-') throw ParseError(std::string("negative ") + what, line);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'", line);
  return v;
}

Weight parse_weight(std::string_view tok, std::size_t line) {
  if (tok == "inf" || tok == "INF") return kInfinite;
  Weight w = parse_uint(tok, line, "weight");
  if (w == kInfinite) throw ParseError("weight collides with the infinite sentinel", line);
  return w;
}

NodeId parse_id(std::string_view tok, std::size_t n, std::size_t line) {
  std::uint64_t v = parse_uint(tok, line, "node id");
  if (v < 1 || v > n) throw ParseError("node id " + std::string(tok) + " out of range", line);
  return static_cast<NodeId>(v - 1);
}

json weight_json(Weight w) { return w == kInfinite ? json("inf") : json(w); }

Weight weight_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinite;
    throw ParseError("bad weight string", 0);
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    auto v = j.get<std::int64_t>();
    if (v < 0) throw ParseError("negative weight", 0);
    return static_cast<Weight>(v);
  }
  throw ParseError("weight must be an integer or \"inf\"", 0);
}

NodeId id_from_json(const json& j, std::size_t n) {
  if (!j.is_number_integer()) throw ParseError("node id must be an integer", 0);
  auto v = j.get<std::int64_t>();
  if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError("node id out of range", 0);
  return static_cast<NodeId>(v - 1);
}


}  // namespace

std::string weight_to_string(Weight w) { return w == kInfinite ? "inf" : std::to_string(w); }

AnyGraph parse_text(std::string_view input) {
  std::size_t line_no = 0;
  bool have_header = false;
  bool directed = true;
  std::size_t n = 0, m = 0;
  std::vector<Arc> arcs;
  std::vector<Edge> edges;
  std::vector<Weight> nw;
  TerminalMap terms;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      if (tok.size() != 4 || (tok[1] != "digraph" && tok[1] != "graph"))
        throw ParseError("malformed header, expected 'p digraph|graph <n> <m>'", line_no);
      directed = tok[1] == "digraph";
      n = parse_uint(tok[2], line_no, "node count");
      m = parse_uint(tok[3], line_no, "arc count");
      if (n == 0) throw ParseError("node count must be positive", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("missing header before data", line_no);
    if (tok[0] == "a" || tok[0] == "e") {
      if ((tok[0] == "a") != directed) throw ParseError("line kind does not match header", line_no);
      if (tok.size() != 4) throw ParseError("expected 3 fields", line_no);
      NodeId u = parse_id(tok[1], n, line_no), v = parse_id(tok[2], n, line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      Weight w = parse_weight(tok[3], line_no);
      if (directed)
        arcs.push_back({u, v, w});
      else
        edges.push_back({u, v, w});
    } else if (tok[0] == "n") {
      if (tok.size() != 3) throw ParseError("expected 'n <id> <w|inf>'", line_no);
      if (nw.empty()) nw.assign(n, 1);
      nw[parse_id(tok[1], n, line_no)] = parse_weight(tok[2], line_no);
    } else if (tok[0] == "t") {
      if (tok.size() != 3) throw ParseError("expected 't <name> <id>'", line_no);
      terms[std::string(tok[1])] = parse_id(tok[2], n, line_no);
    } else {
      throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing header", 0);
  std::size_t got = directed ? arcs.size() : edges.size();
  if (got != m) throw ParseError("header announces " + std::to_string(m) + " arcs, found " + std::to_string(got), 0);
  if (directed) return WeightedDigraph(n, std::move(arcs), std::move(nw), {}, std::move(terms));
  return UndirectedGraph(n, std::move(edges), std::move(nw), {}, std::move(terms));
}

AnyGraph parse_json(std::string_view input) {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "digraph" && kind != "graph") throw ParseError("kind must be 'digraph' or 'graph'", 0);
    auto n_signed = j.at("n").get<std::int64_t>();
    if (n_signed <= 0) throw ParseError("n must be positive", 0);
    auto n = static_cast<std::size_t>(n_signed);
    std::vector<Weight> nw;
    if (j.contains("node_weights") && !j["node_weights"].is_null()) {
      const json& w = j["node_weights"];
      nw.assign(n, 1);
      if (w.is_array()) {
        if (w.size() != n) throw ParseError("node_weights must have n entries", 0);
        for (std::size_t i = 0; i < n; ++i) nw[i] = weight_from_json(w[i]);
      } else if (w.is_object()) {
        for (auto it = w.begin(); it != w.end(); ++it) {
          std::size_t id = std::stoul(it.key());
          if (id < 1 || id > n) throw ParseError("node_weights id out of range", 0);
          nw[id - 1] = weight_from_json(it.value());
        }
      } else {
        throw ParseError("node_weights must be an array or object", 0);
      }
    }
    TerminalMap terms;
    if (j.contains("terminals"))
      for (auto it = j["terminals"].begin(); it != j["terminals"].end(); ++it)
        terms[it.key()] = id_from_json(it.value(), n);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    const char* key = kind == "digraph" ? "arcs" : "edges";
    std::vector<Arc> arcs;
    std::vector<Edge> edges;
    if (j.contains(key)) {
      for (const json& a : j[key]) {
        if (!a.is_array() || a.size() != 3) throw ParseError(std::string(key) + " entries must be [u, v, w]", 0);
        NodeId u = id_from_json(a[0], n), v = id_from_json(a[1], n);
        if (u == v) throw ParseError("self-loop", 0);
        Weight w = weight_from_json(a[2]);
        if (kind == "digraph")
          arcs.push_back({u, v, w});
        else
          edges.push_back({u, v, w});
      }
    }
    if (kind == "digraph") return WeightedDigraph(n, std::move(arcs), std::move(nw), std::move(labels), std::move(terms));
    return UndirectedGraph(n, std::move(edges), std::move(nw), std::move(labels), std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad node id key", 0);
  }
}

AnyGraph parse_graph(std::string_view input) {
  for (char c : input) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    return c == '{' ? parse_json(input) : parse_text(input);
  }
  throw ParseError("empty input", 0);
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

WeightedDigraph canonical(const WeightedDigraph& g) {
  std::vector<Arc> arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return std::tie(x.tail, x.head, x.weight) < std::tie(y.tail, y.head, y.weight);
  });
  return WeightedDigraph(g.node_count(), std::move(arcs), g.node_weights(), g.labels(), g.terminals());
}

UndirectedGraph canonical(const UndirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v, x.weight) < std::tie(y.u, y.v, y.weight);
  });
  return UndirectedGraph(g.node_count(), std::move(edges), g.node_weights(), g.labels(), g.terminals());
}

std::string emit_text(const AnyGraph& any) {
  std::ostringstream os;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        constexpr bool directed = std::is_same_v<G, WeightedDigraph>;
        auto c = canonical(g);
        if constexpr (directed) {
          os << "p digraph " << c.node_count() << ' ' << c.arc_count() << '\n';
          for (const Arc& a : c.arcs())
            os << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << weight_to_string(a.weight) << '\n';
        } else {
          os << "p graph " << c.node_count() << ' ' << c.edge_count() << '\n';
          for (const Edge& e : c.edges())
            os << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << weight_to_string(e.weight) << '\n';
        }
        if (c.has_node_weights())
          for (std::size_t v = 0; v < c.node_count(); ++v)
            os << "n " << v + 1 << ' ' << weight_to_string(c.node_weights()[v]) << '\n';
        for (const auto& [name, id] : c.terminals()) os << "t " << name << ' ' << id + 1 << '\n';
      },
      any);
  return os.str();
}

std::string emit_json(const AnyGraph& any) {
  json j;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        constexpr bool directed = std::is_same_v<G, WeightedDigraph>;
        auto c = canonical(g);
        j["kind"] = directed ? "digraph" : "graph";
        j["n"] = c.node_count();
        json list = json::array();
        if constexpr (directed) {
          for (const Arc& a : c.arcs()) list.push_back({a.tail + 1, a.head + 1, weight_json(a.weight)});
          j["arcs"] = list;
        } else {
          for (const Edge& e : c.edges()) list.push_back({e.u + 1, e.v + 1, weight_json(e.weight)});
          j["edges"] = list;
        }
        if (c.has_node_weights()) {
          json w = json::array();
          for (Weight x : c.node_weights()) w.push_back(weight_json(x));
          j["node_weights"] = w;
        }
        json t = json::object();
        for (const auto& [name, id] : c.terminals()) t[name] = id + 1;
        j["terminals"] = t;
        if (!c.labels().empty()) j["labels"] = c.labels();
      },
      any);
  return j.dump(2) + "\n";
}

std::string emit(const AnyGraph& g, Format f) { return f == Format::json ? emit_json(g) : emit_text(g); }

std::vector<int> parse_parts_json(std::string_view input) {
  std::vector<int> parts;
  json j;
  try {
    j = json::parse(input);
  } catch (const json::exception&) {
    return parts;
  }
  if (!j.contains("parts")) return parts;
  for (const json& p : j["parts"]) {
    auto v = p.get<int>();
    if (v < 1) throw ParseError("parts are 1-based", 0);
    parts.push_back(v - 1);
  }
  return parts;
}

NodeId resolve_node(const AnyGraph& any, const std::string& token) {
  return std::visit(
      [&](const auto& g) -> NodeId {
        if (auto t = g.terminal(token)) return *t;
        std::uint64_t id = 0;
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (ec == std::errc() && p == token.data() + token.size()) {
          if (id < 1 || id > g.node_count()) throw InvalidInput("node id '" + token + "' out of range");
          return static_cast<NodeId>(id - 1);
        }
        for (std::size_t v = 0; v < g.labels().size(); ++v)
          if (g.labels()[v] == token) return static_cast<NodeId>(v);
        throw InvalidInput("unknown node '" + token + "'");
      },
      any);
}

}  // namespace cutkit

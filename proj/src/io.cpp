#include "tlir/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "tlir/errors.hpp"

namespace tlir {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw InputError("line " + std::to_string(line.number) + ": " + what);
}

std::int64_t number_at(const Line& line, std::size_t i, std::int64_t min, const char* what) {
  const std::string& s = line.tokens[i];
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) fail(line, std::string("bad ") + what + " '" + s + "'");
  if (value < min) fail(line, std::string(what) + " below " + std::to_string(min));
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(line, "'" + line.tokens[0] + "' takes " + std::to_string(n - 1) + " fields");
}

Edge edge_at(const Line& line, std::size_t i) {
  VertexId a = number_at(line, i, 0, "vertex id");
  VertexId b = number_at(line, i + 1, 0, "vertex id");
  if (a == b) fail(line, "self-loop at " + std::to_string(a));
  return Edge(a, b);
}

}  // namespace

TotalGraph parse_graph(const std::string& text) {
  std::vector<VertexId> ids;
  std::vector<VertexId> empty;
  std::vector<Edge> edges;
  std::set<VertexId> seen;
  std::set<Edge> seen_edges;
  std::vector<std::pair<Edge, Line>> pending;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens[0];
    if (kind == "v") {
      expect_arity(line, 3);
      VertexId v = number_at(line, 1, 0, "vertex id");
      if (!seen.insert(v).second) fail(line, "duplicate vertex " + std::to_string(v));
      ids.push_back(v);
      if (line.tokens[2] == "empty")
        empty.push_back(v);
      else if (line.tokens[2] != "full")
        fail(line, "vertex kind must be full or empty");
    } else if (kind == "e") {
      expect_arity(line, 3);
      Edge e = edge_at(line, 1);
      if (!seen_edges.insert(e).second) fail(line, "duplicate edge");
      pending.emplace_back(e, line);
    } else {
      fail(line, "unknown record '" + kind + "' in a graph file");
    }
  }
  for (const auto& [e, line] : pending) {
    if (!seen.count(e.u) || !seen.count(e.v)) fail(line, "edge endpoint is not a declared vertex");
    edges.push_back(e);
  }
  return TotalGraph(ids, edges, empty);
}

std::string serialize_graph(const TotalGraph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << "v " << v << (g.is_full(v) ? " full" : " empty") << '\n';
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

TotalColoring parse_coloring(const std::string& text) {
  TotalColoring c;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens[0];
    if (kind == "vc") {
      expect_arity(line, 3);
      VertexId v = number_at(line, 1, 0, "vertex id");
      if (c.vertex(v)) fail(line, "vertex " + std::to_string(v) + " colored twice");
      c.set_vertex(v, static_cast<Color>(number_at(line, 2, 1, "color")));
    } else if (kind == "ec") {
      expect_arity(line, 4);
      Edge e = edge_at(line, 1);
      if (c.edge(e)) fail(line, "edge colored twice");
      c.set_edge(e, static_cast<Color>(number_at(line, 3, 1, "color")));
    } else {
      fail(line, "unknown record '" + kind + "' in a coloring file");
    }
  }
  return c;
}

std::string serialize_coloring(const TotalColoring& c) {
  std::ostringstream out;
  for (const auto& [v, k] : c.vertex_colors()) out << "vc " << v << ' ' << k << '\n';
  for (const auto& [e, k] : c.edge_colors()) out << "ec " << e.u << ' ' << e.v << ' ' << k << '\n';
  return out.str();
}

std::string dot_color_name(Color c) {
  static const std::array<const char*, 3> base{"red", "blue", "green"};
  static const std::array<const char*, 7> cycle{"orange", "purple", "brown", "magenta",
                                                "cyan", "gold", "gray"};
  if (c < 1) throw InputError("colors start at 1");
  if (c <= 3) return base[c - 1];
  return cycle[(c - 4) % cycle.size()];
}

std::string to_dot(const TotalGraph& g, const TotalColoring* c) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v << " [";
    std::vector<std::string> attrs;
    if (!g.is_full(v)) attrs.push_back("style=dashed");
    if (c)
      if (auto k = c->vertex(v)) {
        attrs.push_back("style=filled");
        attrs.push_back("fillcolor=" + dot_color_name(*k));
      }
    if (!g.is_full(v) && attrs.size() > 1) attrs = {"style=\"filled,dashed\"", attrs.back()};
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (c)
      if (auto k = c->edge(e)) out << " [color=" << dot_color_name(*k) << ", penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace tlir

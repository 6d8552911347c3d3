#include "tlir/coloring.hpp"

#include <algorithm>
#include <queue>

#include "tlir/errors.hpp"

namespace tlir {

void TotalColoring::set_vertex(VertexId v, Color c) {
  if (c < 1) throw InputError("colors must be positive");
  vertex_[v] = c;
}

void TotalColoring::set_edge(Edge e, Color c) {
  if (c < 1) throw InputError("colors must be positive");
  edge_[e] = c;
}

std::optional<Color> TotalColoring::vertex(VertexId v) const {
  auto it = vertex_.find(v);
  if (it == vertex_.end()) return std::nullopt;
  return it->second;
}

std::optional<Color> TotalColoring::edge(Edge e) const {
  auto it = edge_.find(e);
  if (it == edge_.end()) return std::nullopt;
  return it->second;
}

void TotalColoring::merge(const TotalColoring& other) {
  for (const auto& [v, c] : other.vertex_) vertex_[v] = c;
  for (const auto& [e, c] : other.edge_) edge_[e] = c;
}

TotalColoring TotalColoring::recolored(const std::map<Color, Color>& mapping) const {
  auto apply = [&](Color c) {
    auto it = mapping.find(c);
    return it == mapping.end() ? c : it->second;
  };
  TotalColoring out;
  for (const auto& [v, c] : vertex_) out.set_vertex(v, apply(c));
  for (const auto& [e, c] : edge_) out.set_edge(e, apply(c));
  return out;
}

std::set<Color> TotalColoring::colors_used() const {
  std::set<Color> out;
  for (const auto& [v, c] : vertex_) out.insert(c);
  for (const auto& [e, c] : edge_) out.insert(c);
  return out;
}

std::size_t total_color_degree(const TotalGraph& g, const TotalColoring& c, VertexId v, Color k) {
  std::size_t d = c.vertex(v) == k ? 1 : 0;
  for (VertexId w : g.neighbors(v))
    if (c.edge(Edge(v, w)) == k) ++d;
  return d;
}

namespace {

Violation check_edge(const TotalGraph& g, const TotalColoring& c, const Edge& e, Color k) {
  return Violation{e, k, total_color_degree(g, c, e.u, k), total_color_degree(g, c, e.v, k)};
}

}  // namespace

TlirReport verify_tlir(const TotalGraph& g, const TotalColoring& c, bool require_total) {
  TlirReport report;
  for (const auto& [v, k] : c.vertex_colors()) {
    if (!g.contains(v))
      report.foreign.push_back("vertex " + std::to_string(v));
    else if (!g.is_full(v))
      report.colored_empty.push_back(v);
  }
  for (const auto& [e, k] : c.edge_colors()) {
    if (!g.has_edge(e.u, e.v))
      report.foreign.push_back("edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
  for (const Edge& e : g.edges()) {
    auto k = c.edge(e);
    if (!k) {
      if (require_total) report.uncolored_edges.push_back(e);
      continue;
    }
    Violation v = check_edge(g, c, e, *k);
    if (v.degree_u == v.degree_v) report.violations.push_back(v);
  }
  if (require_total) {
    for (VertexId v : g.vertices())
      if (g.is_full(v) && !c.vertex(v)) report.uncolored_vertices.push_back(v);
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

std::vector<Violation> violations_near(const TotalGraph& g, const TotalColoring& c,
                                       const std::set<VertexId>& vertices) {
  std::set<Edge> edges;
  for (VertexId v : vertices)
    for (VertexId w : g.neighbors(v)) edges.insert(Edge(v, w));
  std::vector<Violation> out;
  for (const Edge& e : edges) {
    auto k = c.edge(e);
    if (!k) continue;
    Violation v = check_edge(g, c, e, *k);
    if (v.degree_u == v.degree_v) out.push_back(v);
  }
  return out;
}

std::optional<Edge> verify_proper(const TotalGraph& g, const VertexColoring& vc) {
  for (const Edge& e : g.edges()) {
    auto a = vc.find(e.u);
    auto b = vc.find(e.v);
    if (a != vc.end() && b != vc.end() && a->second == b->second) return e;
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> verify_acyclic(const TotalGraph& g, const VertexColoring& vc) {
  for (VertexId v : g.vertices())
    if (!vc.count(v)) throw PreconditionError("verify_acyclic: vertex coloring is partial");
  if (verify_proper(g, vc)) throw PreconditionError("verify_acyclic: vertex coloring is improper");

  std::set<Color> palette;
  for (const auto& [v, c] : vc) palette.insert(c);
  for (auto a = palette.begin(); a != palette.end(); ++a) {
    for (auto b = std::next(a); b != palette.end(); ++b) {
      std::map<VertexId, std::vector<VertexId>> forest;
      for (const Edge& e : g.edges()) {
        Color cu = vc.at(e.u), cv = vc.at(e.v);
        if (!((cu == *a && cv == *b) || (cu == *b && cv == *a))) continue;
        // Path from e.u to e.v inside the forest built so far closes a cycle.
        std::map<VertexId, VertexId> parent{{e.u, e.u}};
        std::queue<VertexId> queue;
        queue.push(e.u);
        while (!queue.empty() && !parent.count(e.v)) {
          VertexId x = queue.front();
          queue.pop();
          for (VertexId y : forest[x]) {
            if (parent.count(y)) continue;
            parent[y] = x;
            queue.push(y);
          }
        }
        if (parent.count(e.v)) {
          std::vector<VertexId> cycle;
          for (VertexId x = e.v; x != e.u; x = parent[x]) cycle.push_back(x);
          cycle.push_back(e.u);
          return cycle;
        }
        forest[e.u].push_back(e.v);
        forest[e.v].push_back(e.u);
      }
    }
  }
  return std::nullopt;
}

StarReport verify_star(const TotalGraph& g, const EdgeColoring& ec, const VertexColoring* vc) {
  StarReport report;
  for (const Edge& e : g.edges()) {
    if (!ec.count(e)) {
      report.violation = "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is uncolored";
      return report;
    }
  }
  std::map<Color, std::vector<Edge>> classes;
  for (const auto& [e, c] : ec) classes[c].push_back(e);

  for (const auto& [color, edges] : classes) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::set<VertexId> seen;
    for (const auto& [start, unused] : adj) {
      if (seen.count(start)) continue;
      std::vector<VertexId> comp;
      std::queue<VertexId> queue;
      queue.push(start);
      seen.insert(start);
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop();
        comp.push_back(x);
        for (VertexId y : adj[x])
          if (seen.insert(y).second) queue.push(y);
      }
      std::size_t comp_edges = 0;
      for (VertexId x : comp) comp_edges += adj[x].size();
      comp_edges /= 2;

      Star star;
      star.color = color;
      std::optional<VertexId> center;
      for (VertexId x : comp)
        if (adj[x].size() == comp_edges) {
          center = x;
          break;
        }
      if (comp_edges + 1 != comp.size() || !center) {
        report.violation = "class " + std::to_string(color) + " component at vertex " +
                           std::to_string(start) + " is not a star";
        return report;
      }
      if (comp_edges == 1) {
        VertexId a = std::min(comp[0], comp[1]), b = std::max(comp[0], comp[1]);
        center = a;
        if (vc && vc->count(b) && vc->at(b) == color && !(vc->count(a) && vc->at(a) == color))
          center = b;
      } else if (vc && (!vc->count(*center) || vc->at(*center) != color)) {
        report.violation = "class " + std::to_string(color) + " star centered at " +
                           std::to_string(*center) + " has a center of a different vertex color";
        return report;
      }
      star.center = *center;
      for (VertexId y : adj[star.center]) star.edges.emplace_back(star.center, y);
      std::sort(star.edges.begin(), star.edges.end());
      report.stars.push_back(std::move(star));
    }
  }
  return report;
}

}  // namespace tlir

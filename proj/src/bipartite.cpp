#include "tlir/bipartite.hpp"

#include <map>
#include <queue>
#include <set>

#include "tlir/errors.hpp"

namespace tlir {

namespace {

Color other_of(Color c, RedBlue colors) { return c == colors.red ? colors.blue : colors.red; }

void require_full(const TotalGraph& g) {
  if (!g.all_full()) throw PreconditionError("construction needs every vertex full");
}

}  // namespace

TotalColoring bipartite_tlir2(const TotalGraph& g, const Bipartition& parts, RedBlue colors) {
  if (!is_valid_bipartition(g, parts)) throw PreconditionError("not a bipartition of the graph");
  require_full(g);
  TotalColoring c;
  for (const Edge& e : g.edges()) c.set_edge(e, colors.red);
  for (VertexId x : parts.x) c.set_vertex(x, g.degree(x) % 2 == 0 ? colors.blue : colors.red);
  for (VertexId y : parts.y) c.set_vertex(y, g.degree(y) % 2 == 1 ? colors.blue : colors.red);
  return c;
}

TotalColoring bipartite_tlir2(const TotalGraph& g) {
  auto parts = find_bipartition(g);
  if (!parts) throw PreconditionError("graph is not bipartite");
  return bipartite_tlir2(g, *parts);
}

TotalColoring tree_parity_coloring(const TotalGraph& tree, VertexId root, Color root_color,
                                   Color edge_color, RedBlue colors) {
  if (edge_color != colors.red && edge_color != colors.blue)
    throw InputError("edge color outside the red-blue pair");
  if (root_color != colors.red && root_color != colors.blue)
    throw InputError("root color outside the red-blue pair");
  const Color other = other_of(edge_color, colors);
  // Side 0 takes `other` on even degree, side 1 on odd degree.
  auto color_of = [&](VertexId v, int side) {
    bool even = tree.degree(v) % 2 == 0;
    return (side == 0) == even ? other : edge_color;
  };
  int root_side = color_of(root, 0) == root_color ? 0 : 1;

  TotalColoring c;
  std::map<VertexId, int> side{{root, root_side}};
  std::queue<VertexId> queue;
  queue.push(root);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    c.set_vertex(v, color_of(v, side[v]));
    for (VertexId w : tree.neighbors(v)) {
      c.set_edge(Edge(v, w), edge_color);
      if (side.count(w)) continue;
      side[w] = 1 - side[v];
      queue.push(w);
    }
  }
  return c;
}

PartialBipartiteColoring partial_bipartite_tlir(const TotalGraph& g, const std::vector<VertexId>& x,
                                                const std::vector<VertexId>& y,
                                                RedBlue colors) {
  if (!is_valid_bipartition(g, Bipartition{x, y}))
    throw PreconditionError("not a bipartition of the graph");
  for (VertexId v : y)
    if (g.degree(v) == 0) throw PreconditionError("isolated vertex in Y");

  std::map<VertexId, std::vector<Edge>> stars;  // keyed by the X center
  std::set<Edge> star_edges;
  for (VertexId v : y) {
    if (g.degree(v) % 2 != 0) continue;
    VertexId center = g.neighbors(v).front();
    stars[center].emplace_back(center, v);
    star_edges.insert(Edge(center, v));
  }

  PartialBipartiteColoring out;
  for (const auto& [center, edges] : stars) {
    if (edges.size() == 1)
      out.uncolored_edges.push_back(edges.front());
    else
      for (const Edge& e : edges) out.coloring.set_edge(e, colors.blue);
  }
  std::map<VertexId, std::size_t> red_count;
  for (const Edge& e : g.edges()) {
    if (star_edges.count(e)) continue;
    out.coloring.set_edge(e, colors.red);
    ++red_count[e.u];
    ++red_count[e.v];
  }
  for (VertexId v : x) out.coloring.set_vertex(v, red_count[v] % 2 == 0 ? colors.blue : colors.red);
  std::sort(out.uncolored_edges.begin(), out.uncolored_edges.end());
  return out;
}

TotalColoring attach_pendant_tree(const TotalGraph& g, const TotalColoring& c, VertexId v,
                                  const TotalGraph& tree) {
  if (!g.contains(v) || !tree.contains(v)) throw InputError("attachment vertex missing");
  for (VertexId w : tree.vertices())
    if (w != v && g.contains(w)) throw InputError("tree shares more than the attachment vertex");
  if (tree.num_edges() + 1 != tree.num_vertices() || !is_connected(tree))
    throw InputError("attached graph is not a tree");
  if (g.degree(v) > 2) throw PreconditionError("attachment vertex has degree above 2");
  if (tree.num_edges() == 0) return c;
  require_full(tree);

  auto v_color = c.vertex(v);
  if (!v_color) throw PreconditionError("attachment vertex is uncolored");
  std::set<Color> at_v;
  for (VertexId w : g.neighbors(v)) {
    auto k = c.edge(Edge(v, w));
    if (!k) throw PreconditionError("coloring of the base graph is partial");
    at_v.insert(*k);
  }

  const TotalGraph joined = graph_union(g, tree);
  if (at_v.size() <= 1) {
    Color base = at_v.empty() ? kBlue : *at_v.begin();
    TotalColoring out = c;
    out.merge(tree_parity_coloring(tree, v, *v_color, swap_red_blue(base)));
    ensure(verify_tlir(joined, out).valid(), "pendant tree attachment produced a conflict");
    return out;
  }

  std::set<VertexId> just_v{v};
  const std::pair<Color, Color> candidates[] = {
      {kRed, kBlue}, {kRed, kRed}, {kBlue, kBlue}, {kBlue, kRed}};  // (edges, v)
  for (const auto& [edge_color, root_color] : candidates) {
    TotalColoring out = c;
    out.merge(tree_parity_coloring(tree, v, root_color, edge_color));
    bool base_ok = true;
    for (const Violation& bad : violations_near(joined, out, just_v))
      if (g.has_edge(bad.edge.u, bad.edge.v)) base_ok = false;
    if (!base_ok) continue;
    if (!violations_near(joined, out, just_v).empty()) {
      for (VertexId w : tree.vertices())
        if (w != v) out.set_vertex(w, swap_red_blue(*out.vertex(w)));
    }
    if (verify_tlir(joined, out).valid()) return out;
  }
  throw InvariantError("no candidate tree coloring fits at the attachment vertex");
}

}  // namespace tlir

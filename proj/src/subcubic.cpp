#include "tlir/subcubic.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "tlir/bipartite.hpp"
#include "tlir/errors.hpp"
#include "tlir/independent.hpp"
#include "tlir/oracle.hpp"
#include "tlir/structure.hpp"

namespace tlir {

// --- layered colorer for regular graphs ---------------------------------------

namespace {

std::optional<std::size_t> regular_degree(const TotalGraph& g) {
  if (g.num_vertices() == 0) return std::nullopt;
  std::size_t d = g.degree(g.vertices().front());
  for (VertexId v : g.vertices())
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

void add_layer(Layering& out, const std::vector<VertexId>& layer) {
  for (VertexId v : layer) out.index[v] = out.layers.size();
  out.layers.push_back(layer);
}

void fill_layers(const TotalGraph& g, Layering& out) {
  std::set<VertexId> placed;
  for (const auto& layer : out.layers) placed.insert(layer.begin(), layer.end());
  while (placed.size() < g.num_vertices()) {
    TotalGraph rest = remove_vertices(g, placed);
    std::vector<VertexId> layer = max_independent_set(rest);
    add_layer(out, layer);
    placed.insert(layer.begin(), layer.end());
  }
}

// Red edge set with r(v) in {t(v) - 1, t(v)} for every vertex.
class RedEdgeSearch {
 public:
  RedEdgeSearch(const TotalGraph& g, const std::vector<int>& lo, const std::vector<int>& hi)
      : g_(g), lo_(lo), hi_(hi) {
    const std::size_t n = g.num_vertices();
    // Vertices in BFS order; each edge decided as soon as its later endpoint
    // comes up, so vertices complete early.
    std::vector<std::size_t> pos(n, n);
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < n; ++s) {
      if (pos[s] != n) continue;
      pos[s] = order.size();
      order.push_back(s);
      for (std::size_t k = order.size() - 1; k < order.size(); ++k)
        for (VertexId w : g.neighbors(g.vertices()[order[k]])) {
          std::size_t j = g.index_of(w);
          if (pos[j] == n) {
            pos[j] = order.size();
            order.push_back(j);
          }
        }
    }
    for (const Edge& e : g.edges()) {
      std::size_t a = g.index_of(e.u), b = g.index_of(e.v);
      edges_.push_back({a, b});
    }
    std::sort(edges_.begin(), edges_.end(), [&](const auto& x, const auto& y) {
      auto kx = std::make_pair(std::max(pos[x.first], pos[x.second]),
                               std::min(pos[x.first], pos[x.second]));
      auto ky = std::make_pair(std::max(pos[y.first], pos[y.second]),
                               std::min(pos[y.first], pos[y.second]));
      return kx < ky;
    });
    red_.assign(n, 0);
    left_.assign(n, 0);
    for (const auto& [a, b] : edges_) {
      ++left_[a];
      ++left_[b];
    }
    value_.assign(edges_.size(), false);
  }

  bool run() {
    for (std::size_t v = 0; v < red_.size(); ++v)
      if (!feasible(v)) return false;
    return dfs(0);
  }
  bool is_red(std::size_t k) const { return value_[k]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  bool feasible(std::size_t v) const { return red_[v] <= hi_[v] && red_[v] + left_[v] >= lo_[v]; }

  bool dfs(std::size_t k) {
    if (k == edges_.size()) return true;
    if (++nodes_ > kNodeLimit) throw InvariantError("layered red-degree search exceeded its node limit");
    auto [a, b] = edges_[k];
    --left_[a];
    --left_[b];
    for (bool red : {true, false}) {
      if (red) {
        ++red_[a];
        ++red_[b];
      }
      if (feasible(a) && feasible(b)) {
        value_[k] = red;
        if (dfs(k + 1)) return true;
      }
      if (red) {
        --red_[a];
        --red_[b];
      }
    }
    ++left_[a];
    ++left_[b];
    return false;
  }

  static constexpr std::uint64_t kNodeLimit = 200'000'000;
  const TotalGraph& g_;
  std::vector<int> lo_, hi_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<int> red_, left_;
  std::vector<bool> value_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Layering layering_from(const TotalGraph& g, const std::vector<VertexId>& first) {
  if (!is_independent(g, first)) throw PreconditionError("first layer is not an independent set");
  Layering out;
  add_layer(out, first);
  fill_layers(g, out);
  return out;
}

Layering build_layering(const TotalGraph& g, const std::set<VertexId>& avoid) {
  return layering_from(g, max_independent_set(g, avoid));
}

TotalColoring regular_layered_tlir2(const TotalGraph& g, const std::set<VertexId>& avoid) {
  if (!regular_degree(g)) throw PreconditionError("regular_layered_tlir2: graph is not regular");
  return regular_layered_tlir2(g, build_layering(g, avoid));
}

TotalColoring regular_layered_tlir2(const TotalGraph& g, const Layering& layering) {
  auto d = regular_degree(g);
  if (!d) throw PreconditionError("regular_layered_tlir2: graph is not regular");
  if (!g.all_full()) throw PreconditionError("regular_layered_tlir2: every vertex must be full");
  if (layering.index.size() != g.num_vertices())
    throw PreconditionError("layering does not cover the graph");
  for (const auto& layer : layering.layers)
    if (!is_independent(g, layer)) throw PreconditionError("layer is not independent");

  const std::size_t n = g.num_vertices();
  std::vector<int> target(n), lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t layer = layering.index.at(g.vertices()[i]);
    ensure(layer <= *d + 1, "more layers than red-degree targets");
    target[i] = static_cast<int>(*d + 1 - layer);
    lo[i] = std::max(target[i] - 1, 0);
    hi[i] = std::min(target[i], static_cast<int>(*d));
  }
  RedEdgeSearch search(g, lo, hi);
  if (!search.run()) throw InvariantError("no red edge set meets the layer targets");

  TotalColoring c;
  std::vector<int> red(n, 0);
  for (std::size_t k = 0; k < search.edges().size(); ++k) {
    auto [a, b] = search.edges()[k];
    bool is_red = search.is_red(k);
    c.set_edge(Edge(g.vertices()[a], g.vertices()[b]), is_red ? kRed : kBlue);
    if (is_red) {
      ++red[a];
      ++red[b];
    }
  }
  for (std::size_t i = 0; i < n; ++i) c.set_vertex(g.vertices()[i], red[i] == target[i] ? kBlue : kRed);
  for (std::size_t i = 0; i < n; ++i)
    ensure(total_color_degree(g, c, g.vertices()[i], kRed) == static_cast<std::size_t>(target[i]),
           "vertex misses its layer red-degree");
  ensure(verify_tlir(g, c).valid(), "layered coloring failed verification");
  return c;
}

// --- reductions ---------------------------------------------------------------

std::size_t subcubic_deficit(const TotalGraph& g) {
  std::size_t s = 0;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 3) throw PreconditionError("graph is not subcubic");
    s += 3 - g.degree(v);
  }
  return s;
}

namespace {

bool is_tree(const TotalGraph& g) {
  return g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

VertexId other_neighbor(const TotalGraph& g, VertexId v, VertexId not_this) {
  for (VertexId w : g.neighbors(v))
    if (w != not_this) return w;
  throw InvariantError("vertex has no second neighbor");
}

std::optional<Reduction> pendant_tree_reduction(const TotalGraph& g) {
  bool has_leaf = false;
  for (VertexId v : g.vertices()) has_leaf |= g.degree(v) == 1;
  if (!has_leaf) return std::nullopt;

  // Peel leaves down to the 2-core.
  std::map<VertexId, std::size_t> deg;
  std::set<VertexId> core(g.vertices().begin(), g.vertices().end());
  std::queue<VertexId> queue;
  for (VertexId v : g.vertices()) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    if (!core.erase(v)) continue;
    for (VertexId w : g.neighbors(v))
      if (core.count(w) && --deg[w] == 1) queue.push(w);
  }
  ensure(!core.empty(), "pendant tree search on a tree");

  for (VertexId u : core) {
    std::set<VertexId> tree{u};
    std::queue<VertexId> grow;
    for (VertexId w : g.neighbors(u))
      if (!core.count(w)) {
        tree.insert(w);
        grow.push(w);
      }
    if (tree.size() == 1) continue;
    while (!grow.empty()) {
      VertexId v = grow.front();
      grow.pop();
      for (VertexId w : g.neighbors(v))
        if (!core.count(w) && tree.insert(w).second) grow.push(w);
    }
    Reduction r;
    r.kind = ReductionKind::kPendantTree;
    r.anchor = u;
    r.tree = induced_subgraph(g, tree);
    std::set<VertexId> drop = tree;
    drop.erase(u);
    r.reduced = remove_vertices(g, drop);
    return r;
  }
  throw InvariantError("leaf found but no pendant tree");
}

std::optional<Reduction> adjacent_two_vertices_reduction(const TotalGraph& g) {
  for (VertexId x1 : g.vertices()) {
    if (g.degree(x1) != 2) continue;
    for (VertexId x2 : g.neighbors(x1)) {
      if (g.degree(x2) != 2) continue;
      VertexId x0 = other_neighbor(g, x1, x2);
      VertexId x3 = other_neighbor(g, x2, x1);
      Reduction r;
      if (x0 == x3) {
        r.kind = ReductionKind::kPendantTriangle;
        r.path = {x0, x1, x2, x0};
        r.reduced = remove_vertices(g, {x1, x2});
      } else if (g.has_edge(x0, x3)) {
        if (g.degree(x0) == 2) {
          std::swap(x0, x3);
          std::swap(x1, x2);
        }
        r.path = {x0, x1, x2, x3};
        if (g.degree(x3) == 3) {
          r.kind = ReductionKind::kFourCycle;
          r.reduced = remove_vertices(g, {x1, x2});
        } else {
          r.kind = ReductionKind::kPendantFourCycle;
          r.reduced = remove_vertices(g, {x1, x2, x3});
        }
      } else {
        r.kind = ReductionKind::kAdjacentTwoVertices;
        r.path = {x0, x1, x2, x3};
        r.reduced = with_edges(remove_vertices(g, {x1, x2}), {Edge(x0, x3)});
      }
      return r;
    }
  }
  return std::nullopt;
}

Reduction gadget_reduction(const TotalGraph& g) {
  Reduction r;
  r.kind = ReductionKind::kGadgets;
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  VertexId next = g.max_id() + 1;
  for (VertexId x : g.vertices()) {
    if (g.degree(x) != 2) continue;
    Gadget gadget{x, {next, next + 1, next + 2, next + 3, next + 4}};
    next += 5;
    const auto& w = gadget.w;
    ids.insert(ids.end(), w.begin(), w.end());
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})
      edges.emplace_back(w[a], w[b]);
    edges.emplace_back(x, w[0]);
    r.gadgets.push_back(gadget);
  }
  ensure(!r.gadgets.empty(), "gadget reduction without 2-vertices");
  r.reduced = TotalGraph(ids, edges);
  return r;
}

}  // namespace

Reduction find_reduction(const TotalGraph& g) {
  subcubic_deficit(g);
  if (g.num_vertices() <= 1 || regular_degree(g) || is_tree(g)) {
    Reduction none;
    none.reduced = g;
    return none;
  }
  if (!is_connected(g)) throw PreconditionError("find_reduction needs a connected graph");
  if (auto r = pendant_tree_reduction(g)) return *r;
  if (auto r = adjacent_two_vertices_reduction(g)) return *r;
  return gadget_reduction(g);
}

TotalGraph undo_reduction(const Reduction& r) {
  const auto& p = r.path;
  switch (r.kind) {
    case ReductionKind::kNone:
      return r.reduced;
    case ReductionKind::kPendantTree:
      return graph_union(r.reduced, r.tree);
    case ReductionKind::kAdjacentTwoVertices:
      return graph_union(with_edges(r.reduced, {}, {Edge(p[0], p[3])}),
                         TotalGraph({p[0], p[1], p[2], p[3]},
                                    {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}}));
    case ReductionKind::kFourCycle:
    case ReductionKind::kPendantFourCycle:
      return graph_union(r.reduced, TotalGraph({p[0], p[1], p[2], p[3]},
                                               {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}, {p[3], p[0]}}));
    case ReductionKind::kPendantTriangle:
      return graph_union(r.reduced,
                         TotalGraph({p[0], p[1], p[2]}, {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[0]}}));
    case ReductionKind::kGadgets: {
      std::set<VertexId> drop;
      for (const Gadget& gadget : r.gadgets) drop.insert(gadget.w.begin(), gadget.w.end());
      return remove_vertices(r.reduced, drop);
    }
  }
  throw InvariantError("unknown reduction kind");
}

// --- recursive colorer --------------------------------------------------------

namespace {

TotalColoring swapped(const TotalColoring& c) { return c.recolored({{kRed, kBlue}, {kBlue, kRed}}); }

TotalColoring restrict_to(const TotalColoring& c, const TotalGraph& g) {
  TotalColoring out;
  for (const auto& [v, k] : c.vertex_colors())
    if (g.contains(v)) out.set_vertex(v, k);
  for (const auto& [e, k] : c.edge_colors())
    if (g.contains(e.u) && g.contains(e.v) && g.has_edge(e.u, e.v)) out.set_edge(e, k);
  return out;
}

TotalColoring complete_or_fail(const TotalGraph& g, const TotalColoring& c,
                               const std::vector<Element>& elements, const char* what) {
  auto done = complete_partial_tlir(g, c, elements, {kRed, kBlue});
  if (!done) throw InvariantError(std::string("no completion for ") + what);
  return *done;
}

// The single edge at a vertex of degree 1 in `g`.
Edge lone_edge(const TotalGraph& g, VertexId v) {
  ensure(g.degree(v) == 1, "expected a vertex of degree 1");
  return Edge(v, g.neighbors(v).front());
}

struct NeighborDegrees {
  std::map<VertexId, std::pair<std::size_t, std::size_t>> by_vertex;

  NeighborDegrees(const TotalGraph& g, const TotalColoring& c, VertexId x) {
    for (VertexId y : g.neighbors(x))
      by_vertex[y] = {total_color_degree(g, c, y, kRed), total_color_degree(g, c, y, kBlue)};
  }
};

// Removes one gadget and repairs conflicts at its 2-vertex x by recoloring
// x, optionally exchanging the colors of a neighbor and its edge to x (which
// keeps that neighbor's color-degrees).
TotalColoring remove_gadget(const TotalGraph& h, const TotalColoring& c, VertexId x,
                            SubcubicStats& stats) {
  std::set<VertexId> just_x{x};
  ++stats.gadgets_removed;
  if (violations_near(h, c, just_x).empty()) return c;
  ++stats.gadget_recolorings;

  const NeighborDegrees before(h, c, x);
  std::vector<VertexId> nb(h.neighbors(x).begin(), h.neighbors(x).end());
  for (int mask = 1; mask < 8; ++mask) {
    TotalColoring trial = c;
    if (mask & 1) trial.set_vertex(x, swap_red_blue(*c.vertex(x)));
    bool distinct = true;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (!(mask >> (k + 1) & 1)) continue;
      Color vc = *c.vertex(nb[k]);
      Color ec = *c.edge(Edge(x, nb[k]));
      if (vc == ec) distinct = false;
      trial.set_vertex(nb[k], ec);
      trial.set_edge(Edge(x, nb[k]), vc);
    }
    if (!distinct) continue;
    if (!violations_near(h, trial, just_x).empty()) continue;
    ensure(NeighborDegrees(h, trial, x).by_vertex == before.by_vertex,
           "gadget repair changed a neighbor's color-degrees");
    return trial;
  }

  ++stats.gadget_fallbacks;
  std::vector<Element> elements{Element::of(x)};
  for (VertexId y : nb) elements.push_back(Element::of(Edge(x, y)));
  return complete_or_fail(h, c, elements, "a removed gadget");
}

TotalColoring solve(const TotalGraph& g, SubcubicStats& stats);

TotalColoring lift_gadgets(const TotalGraph& g, const Reduction& r, SubcubicStats& stats) {
  std::set<VertexId> two_vertices;
  for (const Gadget& gadget : r.gadgets) two_vertices.insert(gadget.x);
  // Any maximum independent set of the gadget graph meets each W in two
  // vertices, and {w1, w2} is always one of the choices.
  std::vector<VertexId> first = max_independent_set(g, two_vertices);
  for (const Gadget& gadget : r.gadgets) {
    first.push_back(gadget.w[1]);
    first.push_back(gadget.w[2]);
  }
  Layering layering = layering_from(r.reduced, first);
  TotalColoring c = regular_layered_tlir2(r.reduced, layering);
  for (VertexId v : r.reduced.vertices())
    ensure(total_color_degree(r.reduced, c, v, kRed) == 4 - layering.index.at(v),
           "gadget base coloring misses a layer red-degree");

  TotalGraph h = r.reduced;
  for (const Gadget& gadget : r.gadgets) {
    h = remove_vertices(h, std::set<VertexId>(gadget.w.begin(), gadget.w.end()));
    c = remove_gadget(h, restrict_to(c, h), gadget.x, stats);
  }
  return c;
}

TotalColoring lift(const TotalGraph& g, const Reduction& r, SubcubicStats& stats) {
  const auto& p = r.path;
  switch (r.kind) {
    case ReductionKind::kPendantTree:
      return attach_pendant_tree(r.reduced, solve(r.reduced, stats), r.anchor, r.tree);

    case ReductionKind::kAdjacentTwoVertices: {
      TotalColoring c = solve(r.reduced, stats);
      if (c.edge(Edge(p[0], p[3])) == kBlue) c = swapped(c);
      VertexId x0 = p[0], x1 = p[1], x2 = p[2], x3 = p[3];
      std::size_t a = total_color_degree(r.reduced, c, x0, kRed);
      std::size_t b = total_color_degree(r.reduced, c, x3, kRed);
      if (a < b) {
        std::swap(a, b);
        std::swap(x0, x3);
        std::swap(x1, x2);
      }
      ensure(a > b && b >= 1 && a <= 4, "red degrees outside the lifting table");
      c.clear_edge(Edge(x0, x3));
      c.set_edge(Edge(x0, x1), kRed);
      c.set_edge(Edge(x2, x3), kRed);
      c.set_vertex(x1, kBlue);
      c.set_vertex(x2, kRed);
      c.set_edge(Edge(x1, x2), b == 2 ? kRed : kBlue);
      return c;
    }

    case ReductionKind::kFourCycle: {
      TotalColoring c = solve(r.reduced, stats);
      c.clear_vertex(p[0]);
      c.clear_vertex(p[3]);
      c.clear_edge(Edge(p[0], p[3]));
      std::vector<Element> elements{Element::of(p[0]), Element::of(p[3]),
                                    Element::of(Edge(p[0], p[3])), Element::of(Edge(p[0], p[1])),
                                    Element::of(p[1]), Element::of(Edge(p[1], p[2])),
                                    Element::of(p[2]), Element::of(Edge(p[2], p[3]))};
      return complete_or_fail(g, c, elements, "a 4-cycle with two 3-vertices");
    }

    case ReductionKind::kPendantFourCycle: {
      TotalColoring c = solve(r.reduced, stats);
      if (c.edge(lone_edge(r.reduced, p[0])) == kRed) c = swapped(c);
      TotalGraph square({p[0], p[1], p[2], p[3]},
                        {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}, {p[3], p[0]}});
      // Even-degree vertices on the X side are blue, on the Y side red.
      Bipartition parts = c.vertex(p[0]) == kBlue ? Bipartition{{p[0], p[2]}, {p[1], p[3]}}
                                                  : Bipartition{{p[1], p[3]}, {p[0], p[2]}};
      c.merge(bipartite_tlir2(square, parts));
      return c;
    }

    case ReductionKind::kPendantTriangle: {
      TotalColoring c = solve(r.reduced, stats);
      if (c.edge(lone_edge(r.reduced, p[0])) == kRed) c = swapped(c);
      c.clear_vertex(p[0]);
      std::vector<Element> elements{Element::of(p[0]),          Element::of(Edge(p[0], p[1])),
                                    Element::of(p[1]),          Element::of(Edge(p[1], p[2])),
                                    Element::of(p[2]),          Element::of(Edge(p[2], p[0]))};
      return complete_or_fail(g, c, elements, "a pendant triangle");
    }

    case ReductionKind::kGadgets:
      return lift_gadgets(g, r, stats);

    case ReductionKind::kNone:
      break;
  }
  throw InvariantError("lift called without a reduction");
}

TotalColoring solve(const TotalGraph& g, SubcubicStats& stats) {
  if (regular_degree(g)) {
    ++stats.regular_bases;
    return regular_layered_tlir2(g);
  }
  if (is_tree(g)) {
    ++stats.tree_bases;
    return bipartite_tlir2(g);
  }
  Reduction r = find_reduction(g);
  ensure(r.kind != ReductionKind::kNone, "no reduction on a non-regular, non-tree graph");
  auto measure = [](const TotalGraph& h) {
    return std::make_pair(subcubic_deficit(h), h.num_vertices());
  };
  ensure(measure(r.reduced) < measure(g), "reduction does not decrease (s(G), |V|)");
  ++stats.reductions[r.kind];
  TotalColoring c = lift(g, r, stats);
  ensure(verify_tlir(g, c).valid(), "lifted coloring failed verification");
  return c;
}

}  // namespace

TotalColoring subcubic_tlir2(const TotalGraph& g, SubcubicStats* stats) {
  if (!g.all_full()) throw PreconditionError("subcubic_tlir2: every vertex must be full");
  for (VertexId v : g.vertices())
    if (g.degree(v) > 3) throw PreconditionError("subcubic_tlir2: graph is not subcubic");
  SubcubicStats local;
  SubcubicStats& s = stats ? *stats : local;
  TotalColoring c;
  for (const auto& comp : connected_components(g))
    c.merge(solve(induced_subgraph(g, std::set<VertexId>(comp.begin(), comp.end())), s));
  ensure(verify_tlir(g, c).valid(), "subcubic coloring failed verification");
  ensure(c.num_colors() <= 2, "subcubic coloring uses more than two colors");
  return c;
}

}  // namespace tlir

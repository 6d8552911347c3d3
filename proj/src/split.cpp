#include "tlir/split.hpp"

#include <algorithm>
#include <set>

#include "tlir/bipartite.hpp"
#include "tlir/errors.hpp"
#include "tlir/oracle.hpp"
#include "tlir/structure.hpp"
#include "tlir/subcubic.hpp"

namespace tlir {

SplitPartition split_partition(const TotalGraph& g) {
  auto cert = recognize_split(g);
  if (!cert) throw PreconditionError("graph is not split");
  std::set<VertexId> y(cert->independent.begin(), cert->independent.end());
  std::vector<std::pair<std::size_t, VertexId>> ranked;
  for (VertexId x : cert->clique) {
    std::size_t d = 0;
    for (VertexId w : g.neighbors(x)) d += y.count(w);
    ranked.emplace_back(d, x);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  SplitPartition p;
  for (const auto& [d, x] : ranked) {
    p.x.push_back(x);
    p.d.push_back(d);
  }
  p.y = cert->independent;
  return p;
}

TotalColoring lir_to_tlir(const TotalGraph& g, const EdgeColoring& ec) {
  if (!g.all_full()) throw PreconditionError("lir_to_tlir: every vertex must be full");
  TotalColoring edges_only;
  for (const auto& [e, k] : ec) edges_only.set_edge(e, k);
  TlirReport report = verify_tlir(all_empty(g), edges_only);
  if (!report.valid()) throw PreconditionError("lir_to_tlir: not a locally irregular edge coloring");
  TotalColoring c = edges_only;
  for (VertexId v : g.vertices()) c.set_vertex(v, 1);
  ensure(verify_tlir(g, c).valid(), "lifted edge coloring failed verification");
  return c;
}

SplitRoute split_route(const SplitPartition& p) {
  const std::size_t n = p.x.size();
  auto d = [&](std::size_t i) { return i < n ? p.d[i] : std::size_t{0}; };
  if (n <= 2) return SplitRoute::kTree;
  if (p.y.empty()) return SplitRoute::kComplete;
  if (d(0) < n / 2 && d(1) == 0) return SplitRoute::kSinglePendant;
  if (d(0) == 1 && d(1) == 1 && d(2) == 0 && n >= 6 && n <= 8) return SplitRoute::kTwoPendants;
  return SplitRoute::kEdgeColoring;
}

namespace {

// Layered coloring of the clique X with the vertex of largest total
// red-degree (ties by id) moved onto x_1 by a transposition.
TotalColoring clique_coloring(const TotalGraph& g, const SplitPartition& p) {
  TotalGraph clique = induced_subgraph(g, std::set<VertexId>(p.x.begin(), p.x.end()));
  TotalColoring c = regular_layered_tlir2(clique);
  VertexId top = p.x.front();
  std::size_t best = 0;
  for (VertexId v : clique.vertices()) {
    std::size_t r = total_color_degree(clique, c, v, kRed);
    if (r > best) {
      best = r;
      top = v;
    }
  }
  const VertexId x1 = p.x.front();
  auto swap_ids = [&](VertexId v) { return v == top ? x1 : v == x1 ? top : v; };
  TotalColoring out;
  for (const auto& [v, k] : c.vertex_colors()) out.set_vertex(swap_ids(v), k);
  for (const auto& [e, k] : c.edge_colors()) out.set_edge(Edge(swap_ids(e.u), swap_ids(e.v)), k);
  ensure(verify_tlir(clique, out).valid(), "permuted clique coloring failed verification");
  return out;
}

TotalColoring single_pendant(const TotalGraph& g, const SplitPartition& p) {
  TotalGraph clique = induced_subgraph(g, std::set<VertexId>(p.x.begin(), p.x.end()));
  TotalColoring c = clique_coloring(g, p);
  const VertexId x1 = p.x.front();
  const std::size_t before = total_color_degree(clique, c, x1, kRed);
  for (VertexId v : p.x)
    if (v != x1) ensure(total_color_degree(clique, c, v, kRed) < before, "x_1 is not the strict red maximum");
  for (VertexId y : p.y) {
    c.set_edge(Edge(x1, y), kRed);
    c.set_vertex(y, kBlue);
  }
  return c;
}

TotalColoring two_pendants(const TotalGraph& g, const SplitPartition& p, SplitStats& stats) {
  TotalColoring seed = clique_coloring(g, p);
  std::vector<Element> near;
  const VertexId x1 = p.x[0], x2 = p.x[1];
  near.push_back(Element::of(x1));
  near.push_back(Element::of(x2));
  near.push_back(Element::of(Edge(x1, x2)));
  for (VertexId y : p.y) {
    near.push_back(Element::of(y));
    for (VertexId x : g.neighbors(y)) near.push_back(Element::of(Edge(x, y)));
  }
  if (auto done = complete_partial_tlir(g, seed, near, {kRed, kBlue})) {
    stats.seeded_completion = true;
    return *done;
  }
  std::vector<Element> all;
  for (const Edge& e : g.edges()) all.push_back(Element::of(e));
  for (VertexId v : g.vertices()) all.push_back(Element::of(v));
  auto done = complete_partial_tlir(g, TotalColoring{}, all, {kRed, kBlue});
  if (!done) throw InvariantError("two-pendant split graph admits no red-blue coloring");
  return *done;
}

bool is_p4(const TotalGraph& g) {
  if (g.num_vertices() != 4 || g.num_edges() != 3 || !is_connected(g)) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) > 2) return false;
  return true;
}

TotalColoring solve_connected(const TotalGraph& g, SplitStats& stats) {
  SplitPartition p = split_partition(g);
  stats.route = split_route(p);
  switch (stats.route) {
    case SplitRoute::kTree:
      return bipartite_tlir2(g);
    case SplitRoute::kComplete:
      return regular_layered_tlir2(g);
    case SplitRoute::kSinglePendant:
      return single_pendant(g, p);
    case SplitRoute::kTwoPendants:
      return two_pendants(g, p, stats);
    case SplitRoute::kEdgeColoring: {
      const std::size_t n = p.x.size();
      ensure(!(p.d[0] < n / 2 && p.d[1] == 0), "edge-coloring route in the single-pendant case");
      ensure(!(p.d[0] == 1 && p.d[1] == 1 && p.d[2] == 0 && n >= 6 && n <= 8),
             "edge-coloring route in the two-pendant case");
      ensure(!is_p4(g) && !(g.num_vertices() == 2) && !(g.num_vertices() == 3 && g.num_edges() == 3),
             "edge-coloring route on K2, K3 or P4");
      auto ec = find_lir_coloring(g, 2);
      if (!ec) throw InvariantError("split graph outside both exceptional cases has no 2-edge coloring");
      return lir_to_tlir(g, *ec);
    }
  }
  throw InvariantError("unknown split route");
}

}  // namespace

TotalColoring split_tlir2(const TotalGraph& g, SplitStats* stats) {
  if (!g.all_full()) throw PreconditionError("split_tlir2: every vertex must be full");
  split_partition(g);
  SplitStats local;
  SplitStats& s = stats ? *stats : local;
  TotalColoring c;
  std::size_t nontrivial = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      c.set_vertex(comp.front(), 1);
      continue;
    }
    ++nontrivial;
    c.merge(solve_connected(induced_subgraph(g, std::set<VertexId>(comp.begin(), comp.end())), s));
  }
  ensure(nontrivial <= 1, "split graph with two components that have edges");
  ensure(verify_tlir(g, c).valid(), "split coloring failed verification");
  ensure(c.num_colors() <= 2, "split coloring uses more than two colors");
  return c;
}

}  // namespace tlir

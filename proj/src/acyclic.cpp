#include "tlir/acyclic.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "tlir/errors.hpp"

namespace tlir {

bool is_clique_order(const TotalGraph& g, const CliqueOrder& order) {
  if (order.order.size() != g.num_vertices()) return false;
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.order.size(); ++i) {
    VertexId v = order.order[i];
    if (!g.contains(v) || !pos.emplace(v, i).second) return false;
  }
  for (VertexId v : order.order) {
    std::vector<VertexId> back;
    for (VertexId w : g.neighbors(v))
      if (pos[w] < pos[v]) back.push_back(w);
    if (back.size() > order.k) return false;
    for (std::size_t i = 0; i < back.size(); ++i)
      for (std::size_t j = i + 1; j < back.size(); ++j)
        if (!g.has_edge(back[i], back[j])) return false;
  }
  return true;
}

namespace {

CliqueOrder with_back_lists(const TotalGraph& g, std::vector<VertexId> order, std::size_t k) {
  CliqueOrder out;
  out.order = std::move(order);
  out.k = k;
  std::set<VertexId> earlier;
  for (VertexId v : out.order) {
    auto& back = out.back[v];
    for (VertexId w : g.neighbors(v))
      if (earlier.count(w)) back.push_back(w);
    earlier.insert(v);
  }
  return out;
}

}  // namespace

CliqueOrder maximal_outerplanar_order(const TotalGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw PreconditionError("maximal_outerplanar_order: empty graph");
  if (!is_connected(g)) throw PreconditionError("not maximal outerplanar: disconnected");
  if (n >= 2 && g.num_edges() != 2 * n - 3)
    throw PreconditionError("not maximal outerplanar: " + std::to_string(g.num_edges()) +
                            " edges, expected " + std::to_string(2 * n - 3));
  for (const Edge& e : g.edges()) {
    std::size_t triangles = 0;
    for (VertexId w : g.neighbors(e.u)) triangles += g.has_edge(w, e.v);
    if (triangles > 2)
      throw PreconditionError("not maximal outerplanar: edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v) + " lies in more than two triangles");
  }

  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : g.vertices()) adj[v] = std::set<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<VertexId> peeled;
  while (adj.size() > 2) {
    VertexId pick = -1;
    for (const auto& [v, nb] : adj) {
      if (nb.size() != 2) continue;
      if (adj[*nb.begin()].count(*nb.rbegin())) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw PreconditionError("not maximal outerplanar: peeling is stuck");
    for (VertexId w : adj[pick]) adj[w].erase(pick);
    adj.erase(pick);
    peeled.push_back(pick);
  }
  std::vector<VertexId> order;
  for (const auto& [v, nb] : adj) order.push_back(v);
  order.insert(order.end(), peeled.rbegin(), peeled.rend());
  CliqueOrder out = with_back_lists(g, order, 2);
  ensure(is_clique_order(g, out), "peel order violates the clique condition");
  return out;
}

bool is_maximal_outerplanar(const TotalGraph& g) {
  try {
    maximal_outerplanar_order(g);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

VertexColoring greedy_clique_acyclic(const TotalGraph& g, const CliqueOrder& order) {
  if (!is_clique_order(g, order)) throw PreconditionError("invalid clique order");
  VertexColoring vc;
  for (VertexId v : order.order) {
    std::set<Color> taken;
    for (VertexId w : g.neighbors(v)) {
      auto it = vc.find(w);
      if (it == vc.end()) continue;
      ensure(taken.insert(it->second).second, "two earlier neighbors share a color");
    }
    Color c = 1;
    while (taken.count(c)) ++c;
    ensure(c <= static_cast<Color>(order.k + 1), "greedy coloring needs more than k + 1 colors");
    vc[v] = c;
  }
  ensure(!verify_acyclic(g, vc).has_value(), "greedy clique coloring is not acyclic");
  return vc;
}

EdgeColoring star_from_acyclic(const TotalGraph& g, const VertexColoring& vc, const RootChooser& root) {
  for (VertexId v : g.vertices())
    if (!vc.count(v)) throw PreconditionError("vertex coloring is partial");
  if (verify_proper(g, vc)) throw PreconditionError("vertex coloring is not proper");
  if (verify_acyclic(g, vc)) throw PreconditionError("vertex coloring has a two-colored cycle");

  std::set<Color> colors;
  for (const auto& [v, c] : vc)
    if (g.contains(v)) colors.insert(c);
  EdgeColoring ec;
  for (auto a = colors.begin(); a != colors.end(); ++a)
    for (auto b = std::next(a); b != colors.end(); ++b) {
      std::set<VertexId> keep;
      for (VertexId v : g.vertices())
        if (vc.at(v) == *a || vc.at(v) == *b) keep.insert(v);
      TotalGraph forest = induced_subgraph(g, keep);
      for (auto& comp : connected_components(forest)) {
        if (comp.size() < 2) continue;
        std::sort(comp.begin(), comp.end());
        VertexId r = root ? root(comp) : comp.front();
        if (std::find(comp.begin(), comp.end(), r) == comp.end())
          throw InputError("root chooser returned a vertex outside the component");
        std::set<VertexId> seen{r};
        std::queue<VertexId> queue;
        queue.push(r);
        while (!queue.empty()) {
          VertexId u = queue.front();
          queue.pop();
          for (VertexId w : forest.neighbors(u)) {
            if (seen.count(w)) continue;
            seen.insert(w);
            ec[Edge(u, w)] = vc.at(u);
            queue.push(w);
          }
        }
      }
    }
  ensure(ec.size() == g.num_edges(), "two-colored forests do not cover every edge");
  return ec;
}

TotalColoring acyclic_to_tlir(const TotalGraph& g, const VertexColoring& vc, const RootChooser& root) {
  if (!g.all_full()) throw PreconditionError("acyclic_to_tlir: every vertex must be full");
  EdgeColoring ec = star_from_acyclic(g, vc, root);
  TotalColoring c;
  for (VertexId v : g.vertices()) c.set_vertex(v, vc.at(v));
  for (const auto& [e, k] : ec) c.set_edge(e, k);
  ensure(verify_star(g, ec, &vc).valid(), "edge coloring is not a star coloring centered by vc");
  ensure(verify_tlir(g, c).valid(), "acyclic-to-TLIR conversion failed verification");
  return c;
}

TotalColoring outerplanar_tlir3(const TotalGraph& g, OuterplanarRoute* route, const SearchBudget& budget) {
  if (!g.all_full()) throw PreconditionError("outerplanar_tlir3: every vertex must be full");
  VertexColoring vc;
  if (g.num_vertices() > 0 && is_maximal_outerplanar(g)) {
    if (route) *route = OuterplanarRoute::kPeel;
    vc = greedy_clique_acyclic(g, maximal_outerplanar_order(g));
  } else {
    if (route) *route = OuterplanarRoute::kSearch;
    const std::size_t n = g.num_vertices();
    if (n >= 2 && g.num_edges() > 2 * n - 3)
      throw PreconditionError("not outerplanar: " + std::to_string(g.num_edges()) +
                              " edges exceed 2|V| - 3 = " + std::to_string(2 * n - 3));
    auto found = find_acyclic_coloring(g, 3, budget);
    if (!found) throw PreconditionError("not outerplanar: no acyclic 3-coloring exists");
    vc = *found;
  }
  TotalColoring c = acyclic_to_tlir(g, vc);
  ensure(c.num_colors() <= 3, "outerplanar coloring uses more than three colors");
  return c;
}

TotalColoring planar_tlir_k(const TotalGraph& g, int k, AcyclicHypothesis hypothesis,
                            const SearchBudget& budget, VertexColoring* acyclic) {
  if (k != 5 && k != 7) throw InputError("planar_tlir_k supports k = 5 or k = 7");
  const std::size_t n = g.num_vertices();
  if (hypothesis == AcyclicHypothesis::kPlanar) {
    if (n >= 3 && g.num_edges() > 3 * n - 6)
      throw PreconditionError("not planar: " + std::to_string(g.num_edges()) +
                              " edges exceed 3|V| - 6 = " + std::to_string(3 * n - 6));
  } else {
    std::size_t limit = k == 5 ? 4 : 5;
    if (g.max_degree() > limit)
      throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " exceeds " +
                              std::to_string(limit) + " for k = " + std::to_string(k));
  }
  auto vc = find_acyclic_coloring(g, k, budget);
  if (!vc)
    throw PreconditionError("hypothesis violated: no acyclic " + std::to_string(k) + "-coloring");
  if (acyclic) *acyclic = *vc;
  TotalColoring c = acyclic_to_tlir(g, *vc);
  ensure(c.num_colors() <= static_cast<std::size_t>(k), "coloring exceeds the color bound");
  return c;
}

}  // namespace tlir

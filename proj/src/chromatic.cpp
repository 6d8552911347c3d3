#include "tlir/chromatic.hpp"

#include <algorithm>
#include <set>

#include "tlir/bipartite.hpp"
#include "tlir/errors.hpp"
#include "tlir/structure.hpp"

namespace tlir {

namespace {

class ProperSearch {
 public:
  ProperSearch(const TotalGraph& g, std::size_t k) : g_(g), k_(static_cast<int>(k)) {
    order_.assign(g.vertices().begin(), g.vertices().end());
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  }

  std::optional<VertexColoring> run() {
    if (dfs(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t i, int used) {
    if (i == order_.size()) return true;
    VertexId v = order_[i];
    for (int c = 1; c <= std::min(k_, used + 1); ++c) {
      bool clash = false;
      for (VertexId w : g_.neighbors(v)) {
        auto it = color_.find(w);
        if (it != color_.end() && it->second == c) clash = true;
      }
      if (clash) continue;
      color_[v] = c;
      if (dfs(i + 1, std::max(used, c))) return true;
      color_.erase(v);
    }
    return false;
  }

  const TotalGraph& g_;
  int k_;
  std::vector<VertexId> order_;
  VertexColoring color_;
};

VertexColoring greedy_largest_first(const TotalGraph& g) {
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  VertexColoring out;
  for (VertexId v : order) {
    std::set<Color> taken;
    for (VertexId w : g.neighbors(v))
      if (out.count(w)) taken.insert(out[w]);
    Color c = 1;
    while (taken.count(c)) ++c;
    out[v] = c;
  }
  return out;
}

}  // namespace

std::size_t chromatic_number(const TotalGraph& g, VertexColoring* witness) {
  if (g.num_vertices() == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    if (auto c = ProperSearch(g, k).run()) {
      if (witness) *witness = *c;
      return k;
    }
  }
}

ProperClasses maximal_proper_classes(const TotalGraph& g, std::optional<std::size_t> k) {
  if (g.num_vertices() == 0) throw PreconditionError("maximal_proper_classes: empty graph");
  VertexColoring coloring;
  if (!k) {
    chromatic_number(g, &coloring);
  } else {
    coloring = greedy_largest_first(g);
    std::size_t used = 0;
    for (const auto& [v, c] : coloring) used = std::max(used, static_cast<std::size_t>(c));
    if (used > *k) {
      auto exact = ProperSearch(g, *k).run();
      if (!exact) throw PreconditionError("no proper coloring with the requested number of colors");
      coloring = *exact;
    }
  }

  std::map<VertexId, std::size_t> index;
  std::size_t count = 0;
  for (const auto& [v, c] : coloring) {
    index[v] = static_cast<std::size_t>(c - 1);
    count = std::max(count, index[v] + 1);
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (VertexId v : g.vertices()) {
      std::vector<bool> seen(count, false);
      for (VertexId w : g.neighbors(v)) seen[index[w]] = true;
      for (std::size_t j = 0; j < index[v]; ++j)
        if (!seen[j]) {
          index[v] = j;
          moved = true;
          break;
        }
    }
  }

  ProperClasses p;
  std::vector<std::vector<VertexId>> by_class(count);
  for (const auto& [v, i] : index) by_class[i].push_back(v);
  for (auto& cls : by_class) {
    if (cls.empty()) continue;
    for (VertexId v : cls) p.index[v] = p.classes.size();
    p.classes.push_back(std::move(cls));
  }
  ensure(is_maximal_proper(g, p), "class fixpoint lost the neighbor condition");
  return p;
}

bool is_maximal_proper(const TotalGraph& g, const ProperClasses& p) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    total += p.classes[i].size();
    for (VertexId v : p.classes[i]) {
      auto it = p.index.find(v);
      if (!g.contains(v) || it == p.index.end() || it->second != i) return false;
      std::vector<bool> seen(p.classes.size(), false);
      for (VertexId w : g.neighbors(v)) {
        auto jt = p.index.find(w);
        if (jt == p.index.end() || jt->second == i) return false;
        seen[jt->second] = true;
      }
      for (std::size_t j = 0; j < i; ++j)
        if (!seen[j]) return false;
    }
  }
  return total == g.num_vertices() && p.index.size() == total;
}

TotalColoring chromatic_tlir(const TotalGraph& g, ChromaticStats* stats) {
  return chromatic_tlir(g, maximal_proper_classes(g), stats);
}

TotalColoring chromatic_tlir(const TotalGraph& g, const ProperClasses& p, ChromaticStats* stats) {
  if (!g.all_full()) throw PreconditionError("chromatic_tlir: every vertex must be full");
  if (!is_maximal_proper(g, p)) throw PreconditionError("chromatic_tlir: classes are not maximal proper");
  ChromaticStats local;
  ChromaticStats& s = stats ? *stats : local;
  const std::size_t k = p.classes.size();
  s.classes = k;

  TotalColoring c;
  if (k == 1) {
    for (VertexId v : g.vertices()) c.set_vertex(v, 1);
    return c;
  }
  auto cls = [&](VertexId v) { return p.index.at(v); };
  std::set<Edge> leftover;

  // Stages j = 0..k-3 (A_{j+1} in the 1-based naming) use colors 2j+1, 2j+2.
  for (std::size_t j = 0; j + 2 < k; ++j) {
    for (VertexId v : g.vertices())
      ensure(c.vertex(v).has_value() == (cls(v) < j), "coloring frontier broken before a stage");

    std::set<VertexId> x(p.classes[j].begin(), p.classes[j].end());
    std::vector<Edge> edges;
    std::set<VertexId> y;
    for (VertexId v : p.classes[j])
      for (VertexId w : g.neighbors(v)) {
        Edge e(v, w);
        if (cls(w) > j || leftover.count(e)) {
          edges.push_back(e);
          y.insert(w);
        }
      }
    TotalGraph b(std::vector<VertexId>(x.begin(), x.end()), {});
    b = graph_union(b, edge_subgraph(g, edges));
    for (VertexId w : y)
      if (cls(w) < j) ensure(b.degree(w) == 1, "inherited Y vertex has degree other than 1");

    const Color red = static_cast<Color>(2 * j + 1), blue = static_cast<Color>(2 * j + 2);
    auto part = partial_bipartite_tlir(b, std::vector<VertexId>(x.begin(), x.end()),
                                       std::vector<VertexId>(y.begin(), y.end()), {red, blue});
    c.merge(part.coloring);
    for (const Edge& e : edges) leftover.erase(e);
    for (const Edge& e : part.uncolored_edges) {
      ensure(cls(e.u) > j || cls(e.v) > j, "uncolored edge points back to an earlier class");
      leftover.insert(e);
    }
    for (VertexId w : y)
      if (cls(w) < j)
        ensure(c.edge(Edge(w, b.neighbors(w).front())).has_value(), "inherited Y vertex left its edge uncolored");
    ++s.stages;
  }
  s.leftover_edges = leftover.size();

  // Final stage on A_{k-1} ∪ A_k and the leftover edges.
  const std::size_t a = k - 2, b_cls = k - 1;
  for (VertexId v : g.vertices())
    ensure(c.vertex(v).has_value() == (cls(v) < a), "coloring frontier broken before the last stage");
  std::vector<Edge> edges;
  std::set<VertexId> u_low, u_high;  // U_{k-1}, U_k
  for (const Edge& e : g.edges()) {
    if (c.edge(e)) continue;
    std::size_t cu = cls(e.u), cv = cls(e.v);
    edges.push_back(e);
    if (cu >= a && cv >= a) continue;
    ensure(leftover.count(e) > 0, "uncolored edge that is neither final nor leftover");
    VertexId lower = cu < cv ? e.u : e.v;
    VertexId upper = e.other(lower);
    (cls(upper) == a ? u_low : u_high).insert(lower);
  }
  for (VertexId u : u_low) ensure(!u_high.count(u), "U_{k-1} and U_k intersect");

  std::vector<VertexId> xs(p.classes[a].begin(), p.classes[a].end());
  std::vector<VertexId> ys(p.classes[b_cls].begin(), p.classes[b_cls].end());
  xs.insert(xs.end(), u_high.begin(), u_high.end());
  ys.insert(ys.end(), u_low.begin(), u_low.end());
  std::set<VertexId> all(xs.begin(), xs.end());
  all.insert(ys.begin(), ys.end());
  TotalGraph last = graph_union(TotalGraph(std::vector<VertexId>(all.begin(), all.end()), {}),
                                edge_subgraph(g, edges));
  for (VertexId u : u_low) ensure(last.degree(u) == 1, "U vertex with degree other than 1");
  for (VertexId u : u_high) ensure(last.degree(u) == 1, "U vertex with degree other than 1");

  const Color red = static_cast<Color>(2 * k - 3), blue = static_cast<Color>(2 * k - 2);
  TotalColoring fin = bipartite_tlir2(last, Bipartition{xs, ys}, {red, blue});
  for (VertexId u : u_low) {
    ensure(fin.vertex(u) == blue, "U_{k-1} vertex is not blue");
    fin.clear_vertex(u);
  }
  for (VertexId u : u_high) {
    ensure(fin.vertex(u) == red, "U_k vertex is not red");
    fin.clear_vertex(u);
    VertexId y = last.neighbors(u).front();
    if (total_color_degree(last, fin, y, red) == total_color_degree(last, fin, u, red)) {
      ensure(last.degree(y) == 1, "repaired A_k vertex has degree other than 1");
      fin.set_vertex(y, red);
      ++s.recolored_y;
    }
  }
  c.merge(fin);

  ensure(verify_tlir(g, c).valid(), "chromatic coloring failed verification");
  ensure(c.num_colors() <= 2 * k - 2, "chromatic coloring uses more than 2k - 2 colors");
  return c;
}

}  // namespace tlir

#include "tlir/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tlir/errors.hpp"

namespace tlir {

namespace {

using Clock = std::chrono::steady_clock;

/// Node and wall-clock limits shared by consecutive searches of one call.
class Limits {
 public:
  explicit Limits(const SearchBudget& budget) : node_limit_(budget.node_limit) {
    if (budget.time_limit) deadline_ = Clock::now() + *budget.time_limit;
  }
  Limits(std::optional<std::uint64_t> node_limit) : node_limit_(node_limit) {}

  // False once a limit is reached.
  bool tick() {
    ++nodes_;
    if (node_limit_ && nodes_ > *node_limit_) return false;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) return false;
    return true;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<std::uint64_t> node_limit_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

enum class Outcome { kFound, kExhausted, kStopped };

/// Backtracking over a list of elements. An edge is checked as soon as every
/// element touching either endpoint has been decided.
class TotalSearch {
 public:
  TotalSearch(const TotalGraph& g, const TotalColoring& fixed, const std::vector<Element>& elements,
              const std::vector<Color>& palette, bool break_symmetry, Limits& limits)
      : g_(g), edges_(g.edges().begin(), g.edges().end()), limits_(limits),
        break_symmetry_(break_symmetry) {
    const std::size_t n = g.num_vertices();
    std::set<Color> all(palette.begin(), palette.end());
    TotalColoring base = fixed;
    for (const Element& el : elements) {
      if (el.is_vertex) {
        if (!g.contains(el.vertex)) throw InputError("element vertex not in graph");
        if (!g.is_full(el.vertex)) throw PreconditionError("empty vertices cannot be colored");
        base.clear_vertex(el.vertex);
      } else {
        if (!g.has_edge(el.edge.u, el.edge.v)) throw InputError("element edge not in graph");
        base.clear_edge(el.edge);
      }
    }
    for (Color k : base.colors_used()) all.insert(k);
    colors_.assign(all.begin(), all.end());
    for (Color k : palette) palette_.push_back(color_index(k));
    num_colors_ = colors_.size();

    inc_.assign(n, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      std::size_t a = g.index_of(edges_[e].u), b = g.index_of(edges_[e].v);
      inc_[a].push_back({b, e});
      inc_[b].push_back({a, e});
    }
    vcol_.assign(n, -1);
    ecol_.assign(edges_.size(), -1);
    deg_.assign(n * num_colors_, 0);
    pending_.assign(n, 0);
    for (const auto& [v, k] : base.vertex_colors()) {
      if (!g.contains(v)) continue;
      std::size_t i = g.index_of(v);
      vcol_[i] = color_index(k);
      ++deg_[i * num_colors_ + vcol_[i]];
    }
    for (const auto& [e, k] : base.edge_colors()) {
      if (!g.has_edge(e.u, e.v)) continue;
      std::size_t ei = edge_index(e);
      ecol_[ei] = color_index(k);
      ++deg_[g.index_of(e.u) * num_colors_ + ecol_[ei]];
      ++deg_[g.index_of(e.v) * num_colors_ + ecol_[ei]];
    }
    for (const Element& el : elements) {
      Item item;
      item.is_vertex = el.is_vertex;
      if (el.is_vertex) {
        item.a = g.index_of(el.vertex);
        ++pending_[item.a];
      } else {
        item.e = edge_index(el.edge);
        item.a = g.index_of(el.edge.u);
        item.b = g.index_of(el.edge.v);
        ++pending_[item.a];
        ++pending_[item.b];
      }
      items_.push_back(item);
    }
  }

  Outcome run() {
    stopped_ = false;
    bool ok = dfs(0, -1);
    if (ok) return Outcome::kFound;
    return stopped_ ? Outcome::kStopped : Outcome::kExhausted;
  }

  TotalColoring solution() const {
    TotalColoring out;
    for (std::size_t i = 0; i < vcol_.size(); ++i)
      if (vcol_[i] >= 0) out.set_vertex(g_.vertices()[i], colors_[vcol_[i]]);
    for (std::size_t e = 0; e < ecol_.size(); ++e)
      if (ecol_[e] >= 0) out.set_edge(edges_[e], colors_[ecol_[e]]);
    return out;
  }

 private:
  struct Item {
    bool is_vertex = false;
    std::size_t a = 0, b = 0, e = 0;
  };

  int color_index(Color k) const {
    return static_cast<int>(std::lower_bound(colors_.begin(), colors_.end(), k) - colors_.begin());
  }
  std::size_t edge_index(const Edge& e) const {
    return static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), e) -
                                    edges_.begin());
  }
  int& deg(std::size_t v, int k) { return deg_[v * num_colors_ + k]; }

  bool settled_ok(std::size_t v) {
    if (pending_[v] != 0) return true;
    for (const auto& [w, e] : inc_[v]) {
      int k = ecol_[e];
      if (k >= 0 && pending_[w] == 0 && deg(v, k) == deg(w, k)) return false;
    }
    return true;
  }

  bool dfs(std::size_t i, int max_used) {
    if (i == items_.size()) return true;
    if (!limits_.tick()) {
      stopped_ = true;
      return false;
    }
    const Item& item = items_[i];
    for (std::size_t j = 0; j < palette_.size(); ++j) {
      if (break_symmetry_ && static_cast<int>(j) > max_used + 1) break;
      int k = palette_[j];
      assign(item, k);
      bool ok = settled_ok(item.a) && (item.is_vertex || settled_ok(item.b)) &&
                dfs(i + 1, std::max(max_used, static_cast<int>(j)));
      if (ok) return true;
      unassign(item, k);
      if (stopped_) return false;
    }
    return false;
  }

  void assign(const Item& item, int k) {
    if (item.is_vertex) {
      vcol_[item.a] = k;
    } else {
      ecol_[item.e] = k;
      ++deg(item.b, k);
      --pending_[item.b];
    }
    ++deg(item.a, k);
    --pending_[item.a];
  }

  void unassign(const Item& item, int k) {
    if (item.is_vertex) {
      vcol_[item.a] = -1;
    } else {
      ecol_[item.e] = -1;
      --deg(item.b, k);
      ++pending_[item.b];
    }
    --deg(item.a, k);
    ++pending_[item.a];
  }

  const TotalGraph& g_;
  std::vector<Edge> edges_;
  Limits& limits_;
  bool break_symmetry_;
  bool stopped_ = false;
  std::vector<Color> colors_;
  std::vector<int> palette_;
  std::size_t num_colors_ = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc_;
  std::vector<int> vcol_, ecol_, deg_, pending_;
  std::vector<Item> items_;
};

std::vector<Color> palette_of(int k) {
  std::vector<Color> out;
  for (int c = 1; c <= k; ++c) out.push_back(c);
  return out;
}

std::vector<Element> all_edges(const TotalGraph& g) {
  std::vector<Element> out;
  for (const Edge& e : g.edges()) out.push_back(Element::of(e));
  return out;
}

}  // namespace

TlirSearchResult exact_tlir(const TotalGraph& g, const SearchBudget& budget) {
  TlirSearchResult result;
  std::vector<Element> elements = all_edges(g);
  for (VertexId v : g.vertices())
    if (g.is_full(v)) elements.push_back(Element::of(v));
  if (elements.empty()) {
    result.status = SearchStatus::kFound;
    return result;
  }
  Limits limits(budget);
  for (int k = 1; k <= budget.max_colors; ++k) {
    TotalSearch search(g, {}, elements, palette_of(k), true, limits);
    Outcome outcome = search.run();
    result.nodes = limits.nodes();
    if (outcome == Outcome::kFound) {
      result.status = SearchStatus::kFound;
      result.value = k;
      result.witness = search.solution();
      return result;
    }
    if (outcome == Outcome::kStopped) {
      result.budget_hit = true;
      return result;
    }
  }
  return result;
}

TlirSearchResult exact_lir(const TotalGraph& g, const SearchBudget& budget) {
  TlirSearchResult result;
  if (g.num_edges() == 0) {
    result.status = SearchStatus::kFound;
    return result;
  }
  TotalGraph h = all_empty(g);
  std::vector<Element> elements = all_edges(h);
  const int m = static_cast<int>(g.num_edges());
  Limits limits(budget);
  auto attempt = [&](int k) {
    TotalSearch search(h, {}, elements, palette_of(k), true, limits);
    Outcome outcome = search.run();
    result.nodes = limits.nodes();
    if (outcome == Outcome::kFound) result.witness = search.solution();
    return outcome;
  };
  for (int k = 1; k <= std::min(budget.max_colors, m); ++k) {
    Outcome outcome = attempt(k);
    if (outcome == Outcome::kFound) {
      result.status = SearchStatus::kFound;
      result.value = k;
      return result;
    }
    if (outcome == Outcome::kStopped) {
      result.budget_hit = true;
      return result;
    }
  }
  if (budget.max_colors >= m) {
    result.status = SearchStatus::kUncolorable;
    return result;
  }
  // With |E| colors every coloring is reachable; exhausting it certifies uncolorability.
  Outcome outcome = attempt(m);
  if (outcome == Outcome::kExhausted) {
    result.status = SearchStatus::kUncolorable;
  } else {
    result.witness = {};
    result.budget_hit = outcome == Outcome::kStopped;
  }
  return result;
}

std::optional<EdgeColoring> find_lir_coloring(const TotalGraph& g, int k,
                                              const SearchBudget& budget) {
  TotalGraph h = all_empty(g);
  Limits limits(budget);
  TotalSearch search(h, {}, all_edges(h), palette_of(k), true, limits);
  Outcome outcome = search.run();
  if (outcome == Outcome::kStopped) throw BudgetExhausted("locally irregular edge coloring search");
  if (outcome == Outcome::kExhausted) return std::nullopt;
  return search.solution().edge_colors();
}

std::optional<TotalColoring> complete_partial_tlir(const TotalGraph& g, const TotalColoring& c,
                                                   const std::vector<Element>& elements,
                                                   const std::vector<Color>& palette,
                                                   std::optional<std::uint64_t> node_limit) {
  Limits limits(node_limit);
  TotalSearch search(g, c, elements, palette, false, limits);
  if (search.run() != Outcome::kFound) return std::nullopt;
  TotalColoring out = c;
  TotalColoring solved = search.solution();
  for (const Element& el : elements) {
    if (el.is_vertex)
      out.set_vertex(el.vertex, *solved.vertex(el.vertex));
    else
      out.set_edge(el.edge, *solved.edge(el.edge));
  }
  return out;
}

// --- acyclic vertex coloring ------------------------------------------------

namespace {

class AcyclicSearch {
 public:
  AcyclicSearch(const TotalGraph& g, int k, Limits& limits) : g_(g), k_(k), limits_(limits) {
    const std::size_t n = g.num_vertices();
    adj_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (VertexId w : g.neighbors(g.vertices()[i])) adj_[i].push_back(g.index_of(w));
    // Static order: repeatedly take the vertex with most ordered neighbors.
    std::vector<int> seen(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!placed[i] && (best == n || seen[i] > seen[best])) best = i;
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t w : adj_[best]) ++seen[w];
    }
    color_.assign(n, -1);
  }

  Outcome run() {
    bool ok = dfs(0, 0);
    if (ok) return Outcome::kFound;
    return stopped_ ? Outcome::kStopped : Outcome::kExhausted;
  }

  VertexColoring solution() const {
    VertexColoring out;
    for (std::size_t i = 0; i < color_.size(); ++i) out[g_.vertices()[i]] = color_[i];
    return out;
  }

 private:
  // True if some two neighbors of v colored b are joined by a path
  // alternating colors a and b that avoids v.
  bool closes_cycle(std::size_t v, int a, int b) {
    std::vector<std::size_t> targets;
    for (std::size_t w : adj_[v])
      if (color_[w] == b) targets.push_back(w);
    if (targets.size() < 2) return false;
    std::vector<int> comp(color_.size(), -1);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::size_t s = targets[t];
      if (comp[s] >= 0) return true;
      std::vector<std::size_t> stack{s};
      comp[s] = static_cast<int>(t);
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : adj_[x]) {
          if (y == v || comp[y] >= 0) continue;
          if (color_[y] != a && color_[y] != b) continue;
          comp[y] = static_cast<int>(t);
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  bool dfs(std::size_t i, int used) {
    if (i == order_.size()) return true;
    if (!limits_.tick()) {
      stopped_ = true;
      return false;
    }
    std::size_t v = order_[i];
    for (int c = 1; c <= std::min(k_, used + 1); ++c) {
      bool ok = true;
      for (std::size_t w : adj_[v])
        if (color_[w] == c) ok = false;
      if (!ok) continue;
      color_[v] = c;
      std::set<int> others;
      for (std::size_t w : adj_[v])
        if (color_[w] > 0) others.insert(color_[w]);
      for (int b : others)
        if (closes_cycle(v, c, b)) {
          ok = false;
          break;
        }
      if (ok && dfs(i + 1, std::max(used, c))) return true;
      color_[v] = -1;
      if (stopped_) return false;
    }
    return false;
  }

  const TotalGraph& g_;
  int k_;
  Limits& limits_;
  bool stopped_ = false;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> order_;
  std::vector<int> color_;
};

}  // namespace

AcyclicSearchResult exact_acyclic(const TotalGraph& g, const SearchBudget& budget) {
  AcyclicSearchResult result;
  if (g.num_vertices() == 0) {
    result.status = SearchStatus::kFound;
    return result;
  }
  Limits limits(budget);
  for (int k = 1; k <= budget.max_colors; ++k) {
    AcyclicSearch search(g, k, limits);
    Outcome outcome = search.run();
    result.nodes = limits.nodes();
    if (outcome == Outcome::kFound) {
      result.status = SearchStatus::kFound;
      result.value = k;
      result.witness = search.solution();
      return result;
    }
    if (outcome == Outcome::kStopped) {
      result.budget_hit = true;
      return result;
    }
  }
  return result;
}

std::optional<VertexColoring> find_acyclic_coloring(const TotalGraph& g, int k,
                                                    const SearchBudget& budget) {
  Limits limits(budget);
  AcyclicSearch search(g, k, limits);
  Outcome outcome = search.run();
  if (outcome == Outcome::kStopped) throw BudgetExhausted("acyclic coloring search");
  if (outcome == Outcome::kExhausted) return std::nullopt;
  return search.solution();
}

}  // namespace tlir

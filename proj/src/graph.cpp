#include "tlir/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tlir/errors.hpp"

namespace tlir {

TotalGraph::TotalGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                       const std::vector<VertexId>& empty_vertices)
    : ids_(std::move(vertices)) {
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw InputError("negative vertex id " + std::to_string(ids_[i]));
    if (i > 0 && ids_[i] == ids_[i - 1])
      throw InputError("duplicate vertex id " + std::to_string(ids_[i]));
  }
  full_.assign(ids_.size(), true);
  for (VertexId v : empty_vertices) full_[index_of(v)] = false;

  for (const Edge& e : edges) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!contains(e.u) || !contains(e.v))
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " uses an undeclared vertex");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    const Edge& dup = *std::adjacent_find(edges.begin(), edges.end());
    throw InputError("parallel edge " + std::to_string(dup.u) + "-" + std::to_string(dup.v));
  }
  edges_ = std::move(edges);

  adj_.assign(ids_.size(), {});
  for (const Edge& e : edges_) {
    adj_[index_of(e.u)].push_back(e.v);
    adj_[index_of(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool TotalGraph::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t TotalGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw InputError("unknown vertex id " + std::to_string(v));
  return static_cast<std::size_t>(it - ids_.begin());
}

bool TotalGraph::has_edge(VertexId a, VertexId b) const {
  if (a == b || !contains(a) || !contains(b)) return false;
  const auto& list = adj_[index_of(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

bool TotalGraph::all_full() const {
  return std::all_of(full_.begin(), full_.end(), [](bool f) { return f; });
}

std::size_t TotalGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

std::vector<VertexId> TotalGraph::empty_vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (!full_[i]) out.push_back(ids_[i]);
  return out;
}

std::size_t total_degree(const TotalGraph& g, VertexId v) {
  return g.degree(v) + (g.is_full(v) ? 1 : 0);
}

TotalGraph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  return TotalGraph(std::move(ids), edges);
}

TotalGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  return make_graph(n, edges);
}

TotalGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return make_graph(n, edges);
}

TotalGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return make_graph(n, edges);
}

TotalGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
  return make_graph(leaves + 1, edges);
}

TotalGraph butterfly_graph() {
  return make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

TotalGraph bowtie_graph() {
  return make_graph(10, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {0, 5},
                         {5, 6}, {6, 7}, {5, 7}, {5, 8}, {8, 9}, {5, 9}});
}

TotalGraph induced_subgraph(const TotalGraph& g, const std::set<VertexId>& keep) {
  std::vector<VertexId> ids;
  std::vector<VertexId> empty;
  for (VertexId v : g.vertices()) {
    if (!keep.count(v)) continue;
    ids.push_back(v);
    if (!g.is_full(v)) empty.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) edges.push_back(e);
  return TotalGraph(std::move(ids), std::move(edges), empty);
}

TotalGraph remove_vertices(const TotalGraph& g, const std::set<VertexId>& drop) {
  std::set<VertexId> keep;
  for (VertexId v : g.vertices())
    if (!drop.count(v)) keep.insert(v);
  return induced_subgraph(g, keep);
}

TotalGraph edge_subgraph(const TotalGraph& g, const std::vector<Edge>& edges,
                         const std::set<VertexId>& extra_vertices) {
  std::set<VertexId> verts = extra_vertices;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw InputError("edge_subgraph: edge not in graph");
    verts.insert(e.u);
    verts.insert(e.v);
  }
  std::vector<VertexId> empty;
  for (VertexId v : verts)
    if (!g.is_full(v)) empty.push_back(v);
  return TotalGraph(std::vector<VertexId>(verts.begin(), verts.end()), edges, empty);
}

TotalGraph with_edges(const TotalGraph& g, const std::vector<Edge>& add,
                      const std::vector<Edge>& remove) {
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : remove) edges.erase(e);
  for (const Edge& e : add) {
    if (!edges.insert(e).second) throw InputError("with_edges: edge already present");
  }
  return TotalGraph(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()),
                    std::vector<Edge>(edges.begin(), edges.end()), g.empty_vertices());
}

TotalGraph graph_union(const TotalGraph& a, const TotalGraph& b) {
  std::set<VertexId> ids(a.vertices().begin(), a.vertices().end());
  ids.insert(b.vertices().begin(), b.vertices().end());
  std::set<Edge> edges(a.edges().begin(), a.edges().end());
  edges.insert(b.edges().begin(), b.edges().end());
  std::vector<VertexId> empty;
  for (VertexId v : ids) {
    bool full_in_a = !a.contains(v) || a.is_full(v);
    bool full_in_b = !b.contains(v) || b.is_full(v);
    if (!(full_in_a && full_in_b)) empty.push_back(v);
  }
  return TotalGraph(std::vector<VertexId>(ids.begin(), ids.end()),
                    std::vector<Edge>(edges.begin(), edges.end()), empty);
}

TotalGraph all_empty(const TotalGraph& g) {
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  return TotalGraph(ids, std::vector<Edge>(g.edges().begin(), g.edges().end()), ids);
}

std::vector<std::vector<VertexId>> connected_components(const TotalGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.num_vertices(), false);
  for (VertexId start : g.vertices()) {
    if (seen[g.index_of(start)]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> queue;
    queue.push(start);
    seen[g.index_of(start)] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[g.index_of(w)]) {
          seen[g.index_of(w)] = true;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const TotalGraph& g) { return connected_components(g).size() <= 1; }

}  // namespace tlir

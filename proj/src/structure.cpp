#include "tlir/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "tlir/errors.hpp"

namespace tlir {

std::size_t BlockCutTree::node_of_cut_vertex(VertexId v) const {
  auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
  if (it == cut_vertices.end() || *it != v) throw InputError("not a cut vertex");
  return blocks.size() + static_cast<std::size_t>(it - cut_vertices.begin());
}

std::vector<std::size_t> BlockCutTree::pruned_neighbors(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t w : incidence[node])
    if (in_pruned[w]) out.push_back(w);
  return out;
}

namespace {

BlockKind kind_of(const Block& b) {
  if (b.edges.size() == 1) return BlockKind::kBridge;
  if (b.edges.size() == b.vertices.size()) return BlockKind::kCycle;
  return BlockKind::kOther;
}

// Tarjan's biconnected components with an explicit edge stack.
std::vector<Block> biconnected_blocks(const TotalGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<Edge> stack;
  std::vector<Block> blocks;
  int time = 0;

  std::function<void(VertexId, VertexId)> dfs = [&](VertexId u, VertexId parent) {
    const std::size_t iu = g.index_of(u);
    disc[iu] = low[iu] = ++time;
    for (VertexId w : g.neighbors(u)) {
      const std::size_t iw = g.index_of(w);
      if (disc[iw] == 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[iu] = std::min(low[iu], low[iw]);
        if (low[iw] >= disc[iu]) {
          Block block;
          std::set<VertexId> verts;
          const Edge stop(u, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.edges.push_back(e);
            verts.insert(e.u);
            verts.insert(e.v);
            if (e == stop) break;
          }
          std::sort(block.edges.begin(), block.edges.end());
          block.vertices.assign(verts.begin(), verts.end());
          block.kind = kind_of(block);
          blocks.push_back(std::move(block));
        }
      } else if (w != parent && disc[iw] < disc[iu]) {
        stack.emplace_back(u, w);
        low[iu] = std::min(low[iu], disc[iw]);
      }
    }
  };

  for (VertexId v : g.vertices())
    if (disc[g.index_of(v)] == 0) dfs(v, -1);

  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return blocks;
}

// BFS distances over nodes accepted by `alive`; returns parent links.
std::vector<long> tree_bfs(const std::vector<std::vector<std::size_t>>& adj,
                           const std::vector<bool>& alive, std::size_t root,
                           std::vector<std::size_t>& parent) {
  std::vector<long> dist(adj.size(), -1);
  parent.assign(adj.size(), adj.size());
  std::queue<std::size_t> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t w : adj[u]) {
      if (!alive[w] || dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      parent[w] = u;
      queue.push(w);
    }
  }
  return dist;
}

// Longest path in a tree (double BFS, ties to the smallest node index).
std::vector<std::size_t> longest_tree_path(const std::vector<std::vector<std::size_t>>& adj,
                                           const std::vector<bool>& alive) {
  std::size_t start = adj.size();
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (alive[i]) {
      start = i;
      break;
    }
  if (start == adj.size()) return {};
  std::vector<std::size_t> parent;
  auto farthest = [&](const std::vector<long>& dist) {
    std::size_t best = start;
    for (std::size_t i = 0; i < dist.size(); ++i)
      if (dist[i] > dist[best]) best = i;
    return best;
  };
  std::size_t a = farthest(tree_bfs(adj, alive, start, parent));
  std::size_t b = farthest(tree_bfs(adj, alive, a, parent));
  std::vector<std::size_t> path;
  for (std::size_t v = b; v != adj.size(); v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());  // a ... b
  return path;
}

PendantTree tree_through(const TotalGraph& g, VertexId x, VertexId y) {
  PendantTree tree;
  tree.root = x;
  std::set<VertexId> verts{x, y};
  std::queue<VertexId> queue;
  queue.push(y);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(u)) {
      if (w == x || verts.count(w)) continue;
      verts.insert(w);
      queue.push(w);
    }
  }
  tree.vertices.assign(verts.begin(), verts.end());
  for (const Edge& e : g.edges())
    if (verts.count(e.u) && verts.count(e.v)) tree.edges.push_back(e);
  return tree;
}

// Attachment vertex of the only cycle when the pruned tree is a single node.
VertexId lone_cycle_anchor(const TotalGraph& g, const Block& cycle) {
  for (VertexId v : cycle.vertices)
    if (g.degree(v) > 2) return v;
  return cycle.vertices.front();
}

void require_cactus(const TotalGraph& g, const char* op) {
  if (!is_cactus(g)) throw PreconditionError(std::string(op) + ": graph is not a connected cactus");
}

}  // namespace

BlockCutTree block_cut_tree(const TotalGraph& g) {
  BlockCutTree t;
  t.blocks = biconnected_blocks(g);
  t.connected = is_connected(g);

  std::map<VertexId, int> membership;
  for (const Block& b : t.blocks)
    for (VertexId v : b.vertices) ++membership[v];
  for (const auto& [v, count] : membership)
    if (count >= 2) t.cut_vertices.push_back(v);

  const std::size_t nb = t.blocks.size();
  t.incidence.assign(nb + t.cut_vertices.size(), {});
  for (std::size_t b = 0; b < nb; ++b) {
    for (VertexId v : t.blocks[b].vertices) {
      if (!std::binary_search(t.cut_vertices.begin(), t.cut_vertices.end(), v)) continue;
      std::size_t c = t.node_of_cut_vertex(v);
      t.incidence[b].push_back(c);
      t.incidence[c].push_back(b);
    }
  }
  for (auto& list : t.incidence) std::sort(list.begin(), list.end());

  t.in_pruned.assign(t.num_nodes(), true);
  std::vector<std::size_t> deg(t.num_nodes());
  std::queue<std::size_t> leaves;
  auto removable = [&](std::size_t node) {
    return !t.is_block_node(node) || t.blocks[node].kind == BlockKind::kBridge;
  };
  for (std::size_t i = 0; i < t.num_nodes(); ++i) {
    deg[i] = t.incidence[i].size();
    if (deg[i] <= 1 && removable(i)) leaves.push(i);
  }
  while (!leaves.empty()) {
    std::size_t node = leaves.front();
    leaves.pop();
    if (!t.in_pruned[node]) continue;
    t.in_pruned[node] = false;
    for (std::size_t w : t.incidence[node]) {
      if (!t.in_pruned[w]) continue;
      if (--deg[w] <= 1 && removable(w)) leaves.push(w);
    }
  }
  return t;
}

std::vector<VertexId> cycle_sequence(const Block& cycle, VertexId start) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : cycle.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> seq{start};
  VertexId prev = start;
  VertexId cur = std::min(adj.at(start)[0], adj.at(start)[1]);
  while (cur != start) {
    seq.push_back(cur);
    const auto& nb = adj.at(cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return seq;
}

bool is_cactus(const TotalGraph& g) {
  if (g.num_vertices() == 0 || !is_connected(g)) return false;
  for (const Block& b : block_cut_tree(g).blocks)
    if (b.kind == BlockKind::kOther) return false;
  return true;
}

std::optional<std::vector<VertexId>> find_pendant_cycle(const TotalGraph& g) {
  require_cactus(g, "find_pendant_cycle");
  BlockCutTree t = block_cut_tree(g);
  std::optional<std::vector<VertexId>> best;
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    if (!t.in_pruned[b]) continue;
    auto nb = t.pruned_neighbors(b);
    if (nb.size() > 1) continue;
    VertexId anchor = nb.empty() ? lone_cycle_anchor(g, t.blocks[b]) : t.cut_vertex_of(nb[0]);
    auto seq = cycle_sequence(t.blocks[b], anchor);
    // Smallest vertex id wins among candidate cycles.
    if (!best || t.blocks[b].vertices.front() <
                     *std::min_element(best->begin(), best->end()))
      best = std::move(seq);
  }
  return best;
}

GoodVertex find_good_vertex(const TotalGraph& g) {
  require_cactus(g, "find_good_vertex");
  GoodVertex out;
  BlockCutTree t = block_cut_tree(g);
  const bool any_pruned = std::find(t.in_pruned.begin(), t.in_pruned.end(), true) != t.in_pruned.end();

  if (!any_pruned) {
    // A tree: use the second vertex of a longest path of the tree itself.
    if (g.num_edges() == 0) {
      out.x = g.vertices().front();
      return out;
    }
    std::vector<std::vector<std::size_t>> adj(g.num_vertices());
    for (const Edge& e : g.edges()) {
      adj[g.index_of(e.u)].push_back(g.index_of(e.v));
      adj[g.index_of(e.v)].push_back(g.index_of(e.u));
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    auto path = longest_tree_path(adj, std::vector<bool>(adj.size(), true));
    out.x = g.vertices()[path[1]];
    for (VertexId y : g.neighbors(out.x)) out.pendant_trees.push_back(tree_through(g, out.x, y));
    return out;
  }

  std::vector<std::size_t> path = longest_tree_path(t.incidence, t.in_pruned);
  std::set<Edge> covered;
  if (path.size() == 1) {
    const Block& cycle = t.blocks[path[0]];
    out.x = lone_cycle_anchor(g, cycle);
    out.pendant_cycles.push_back(cycle_sequence(cycle, out.x));
    covered.insert(cycle.edges.begin(), cycle.edges.end());
  } else {
    const std::size_t xnode = path[1];
    out.x = t.cut_vertex_of(xnode);
    for (std::size_t b : t.pruned_neighbors(xnode)) {
      const Block& block = t.blocks[b];
      const bool leaf = t.pruned_neighbors(b).size() == 1;
      if (leaf && block.kind == BlockKind::kCycle) {
        out.pendant_cycles.push_back(cycle_sequence(block, out.x));
      } else {
        for (const Edge& e : block.edges)
          if (e.touches(out.x)) out.leftover.push_back(e);
      }
      covered.insert(block.edges.begin(), block.edges.end());
    }
    ensure(out.leftover.size() <= 2, "good vertex has more than two leftover edges");
  }
  for (VertexId y : g.neighbors(out.x)) {
    if (covered.count(Edge(out.x, y))) continue;
    out.pendant_trees.push_back(tree_through(g, out.x, y));
  }
  std::sort(out.leftover.begin(), out.leftover.end());
  return out;
}

std::optional<Bipartition> find_bipartition(const TotalGraph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  Bipartition parts;
  for (VertexId start : g.vertices()) {
    if (side[g.index_of(start)] >= 0) continue;
    side[g.index_of(start)] = 0;
    std::queue<VertexId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(u)) {
        int& s = side[g.index_of(w)];
        if (s < 0) {
          s = 1 - side[g.index_of(u)];
          queue.push(w);
        } else if (s == side[g.index_of(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v : g.vertices()) (side[g.index_of(v)] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

bool is_valid_bipartition(const TotalGraph& g, const Bipartition& parts) {
  std::set<VertexId> xs(parts.x.begin(), parts.x.end());
  std::set<VertexId> ys(parts.y.begin(), parts.y.end());
  if (xs.size() + ys.size() != g.num_vertices()) return false;
  for (VertexId v : g.vertices())
    if (xs.count(v) == ys.count(v)) return false;
  for (const Edge& e : g.edges())
    if (xs.count(e.u) == xs.count(e.v)) return false;
  return true;
}

std::optional<SplitCertificate> recognize_split(const TotalGraph& g) {
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
  long head = 0, tail = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    (i < m ? head : tail) += static_cast<long>(g.degree(order[i]));
  if (head != static_cast<long>(m * (m == 0 ? 0 : m - 1)) + tail) return std::nullopt;

  SplitCertificate cert;
  cert.clique.assign(order.begin(), order.begin() + static_cast<long>(m));
  cert.independent.assign(order.begin() + static_cast<long>(m), order.end());
  for (std::size_t i = 0; i < cert.clique.size(); ++i)
    for (std::size_t j = i + 1; j < cert.clique.size(); ++j)
      ensure(g.has_edge(cert.clique[i], cert.clique[j]), "split recognition: clique broken");
  for (std::size_t i = 0; i < cert.independent.size(); ++i)
    for (std::size_t j = i + 1; j < cert.independent.size(); ++j)
      ensure(!g.has_edge(cert.independent[i], cert.independent[j]),
             "split recognition: independent side broken");

  std::sort(cert.independent.begin(), cert.independent.end());
  for (auto it = cert.independent.begin(); it != cert.independent.end(); ++it) {
    const bool sees_all = std::all_of(cert.clique.begin(), cert.clique.end(),
                                      [&](VertexId c) { return g.has_edge(c, *it); });
    if (sees_all) {
      cert.clique.push_back(*it);
      cert.independent.erase(it);
      break;  // a second such vertex would have to be adjacent to the first
    }
  }
  std::sort(cert.clique.begin(), cert.clique.end());
  return cert;
}

ClassReport classify(const TotalGraph& g) {
  ClassReport r;
  r.connected = g.num_vertices() > 0 && is_connected(g);
  r.max_degree = g.max_degree();
  r.is_tree = r.connected && g.num_edges() + 1 == g.num_vertices();
  r.parts = find_bipartition(g);
  r.is_bipartite = r.parts.has_value();
  r.is_cactus = is_cactus(g);
  r.is_subcubic = r.max_degree <= 3;
  if (g.num_vertices() > 0) {
    r.regular_degree = g.degree(g.vertices().front());
    r.is_regular = std::all_of(g.vertices().begin(), g.vertices().end(),
                               [&](VertexId v) { return g.degree(v) == r.regular_degree; });
    if (!r.is_regular) r.regular_degree = 0;
  }
  r.split = recognize_split(g);
  r.is_split = r.split.has_value();
  return r;
}

}  // namespace tlir

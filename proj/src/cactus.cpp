#include "tlir/cactus.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

#include "tlir/bipartite.hpp"
#include "tlir/errors.hpp"
#include "tlir/oracle.hpp"
#include "tlir/structure.hpp"

namespace tlir {

CycleCase cycle_case_for_length(std::size_t length) {
  if (length < 3) throw InputError("cycles have length at least 3");
  if (length == 3) return CycleCase::kLength3;
  if (length == 5) return CycleCase::kLength5;
  return length % 2 == 0 ? CycleCase::kEven : CycleCase::kOddAtLeast7;
}

namespace {

// Colors the path x_first..x_last (1-based positions in `seq`) by the even
// cycle rule: every path edge red, interior vertices alternating red, blue,
// red, ... starting at the second path vertex; the two ends keep their colors.
void color_even_path(TotalColoring& c, const std::vector<VertexId>& seq, std::size_t first,
                     std::size_t last, Color red, Color blue) {
  for (std::size_t i = first; i < last; ++i) c.set_edge(Edge(seq[i], seq[i + 1]), red);
  for (std::size_t i = first + 1; i < last; ++i)
    c.set_vertex(seq[i], (i - first) % 2 == 1 ? red : blue);
}

bool cycle_ok(const TotalGraph& g, const TotalColoring& c, const std::vector<VertexId>& seq) {
  for (VertexId v : seq)
    if (!c.vertex(v)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!c.edge(Edge(seq[i], seq[(i + 1) % seq.size()]))) return false;
  return violations_near(g, c, std::set<VertexId>(seq.begin(), seq.end())).empty();
}

}  // namespace

TotalColoring extend_cycle_case(const TotalGraph& g, const TotalColoring& c,
                                const PendantCycleCase& pc, bool* used_fallback) {
  const std::vector<VertexId>& seq = pc.cycle;
  const std::size_t n = seq.size() - 1;
  const VertexId x = seq[0];
  auto stub = c.edge(Edge(x, seq[1]));
  if (!stub) throw PreconditionError("cycle extension needs the edge x x1 colored");
  const Color blue = *stub;
  const Color red = swap_red_blue(blue);
  const std::size_t b = total_color_degree(g, c, x, blue);
  auto at = [&](std::size_t i) { return seq[i]; };

  TotalColoring out = c;
  switch (pc.kind) {
    case CycleCase::kLength3:
      if (b != 2) {
        out.set_vertex(at(1), blue);
        out.set_edge(Edge(at(1), at(2)), red);
        out.set_vertex(at(2), red);
      } else {
        out.set_vertex(x, blue);
        out.set_edge(Edge(x, at(2)), red);
        out.set_vertex(at(1), blue);
        out.set_edge(Edge(at(1), at(2)), blue);
        out.set_vertex(at(2), red);
        if (total_color_degree(g, out, at(2), red) == total_color_degree(g, out, x, red))
          out.set_vertex(at(2), blue);
      }
      break;
    case CycleCase::kLength5:
      if (b == 2) {
        out.set_vertex(at(1), blue);
        out.set_edge(Edge(at(1), at(2)), blue);
        out.set_vertex(at(2), red);
        out.set_edge(Edge(at(2), at(3)), red);
        out.set_vertex(at(3), red);
        out.set_edge(Edge(at(3), at(4)), red);
        out.set_vertex(at(4), red);
      } else {
        out.set_vertex(at(1), blue);
        out.set_vertex(at(3), blue);
        out.set_vertex(at(4), blue);
        out.set_vertex(at(2), red);
        for (std::size_t i = 1; i < 4; ++i) out.set_edge(Edge(at(i), at(i + 1)), red);
      }
      break;
    case CycleCase::kEven:
      color_even_path(out, seq, 1, n, red, blue);
      break;
    case CycleCase::kOddAtLeast7:
      if (pc.x1_color == blue && pc.xn_color == blue) {
        color_even_path(out, seq, 1, n, red, blue);
      } else {
        out.set_edge(Edge(at(1), at(2)), red);
        out.set_vertex(at(2), red);
        out.set_edge(Edge(at(2), at(3)), red);
        out.set_vertex(at(4), red);
        out.set_vertex(at(3), blue);
        out.set_edge(Edge(at(3), at(4)), blue);
        color_even_path(out, seq, 4, n, red, blue);
      }
      break;
  }

  if (used_fallback) *used_fallback = false;
  if (cycle_ok(g, out, seq)) return out;

  if (used_fallback) *used_fallback = true;
  std::vector<Element> elements;
  for (std::size_t i = 0; i <= n; ++i) elements.push_back(Element::of(Edge(seq[i], seq[(i + 1) % (n + 1)])));
  for (std::size_t i = 1; i <= n; ++i) elements.push_back(Element::of(seq[i]));
  elements.push_back(Element::of(x));
  auto done = complete_partial_tlir(g, c, elements, {kRed, kBlue});
  if (!done) throw InvariantError("pendant cycle admits no extension");
  return *done;
}

namespace {

struct TreeSplit {
  VertexId at = 0;
  std::set<VertexId> tree;  // includes `at`
};

VertexId lone_anchor(const TotalGraph& g, const Block& cycle) {
  for (VertexId v : cycle.vertices)
    if (g.degree(v) > 2) return v;
  return cycle.vertices.front();
}

// A tree hanging off a vertex of a leaf cycle other than its attachment.
std::optional<TreeSplit> find_tree_split(const TotalGraph& g, const BlockCutTree& t) {
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    const Block& block = t.blocks[b];
    if (!t.in_pruned[b] || block.kind != BlockKind::kCycle) continue;
    auto nb = t.pruned_neighbors(b);
    if (nb.size() > 1) continue;
    VertexId anchor = nb.empty() ? lone_anchor(g, block) : t.cut_vertex_of(nb[0]);
    std::set<Edge> cycle_edges(block.edges.begin(), block.edges.end());
    for (VertexId v : block.vertices) {
      if (v == anchor || g.degree(v) <= 2) continue;
      TreeSplit split{v, {v}};
      std::queue<VertexId> queue;
      queue.push(v);
      while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(u)) {
          if (cycle_edges.count(Edge(u, w)) || split.tree.count(w)) continue;
          split.tree.insert(w);
          queue.push(w);
        }
      }
      return split;
    }
  }
  return std::nullopt;
}

TotalColoring solve(const TotalGraph& g, CactusStats& stats) {
  if (g.num_edges() == 0) {
    TotalColoring c;
    c.set_vertex(g.vertices().front(), kRed);
    return c;
  }
  if (g.num_edges() + 1 == g.num_vertices()) {
    ++stats.tree_bases;
    return bipartite_tlir2(g);
  }

  BlockCutTree t = block_cut_tree(g);
  if (auto split = find_tree_split(g, t)) {
    ++stats.tree_splits;
    std::set<VertexId> drop = split->tree;
    drop.erase(split->at);
    TotalGraph rest = remove_vertices(g, drop);
    TotalGraph tree = induced_subgraph(g, split->tree);
    ensure(rest.num_edges() < g.num_edges(), "tree split must shrink the cactus");
    return attach_pendant_tree(rest, solve(rest, stats), split->at, tree);
  }

  ++stats.cycle_openings;
  GoodVertex good = find_good_vertex(g);
  const VertexId x = good.x;
  ensure(!good.pendant_cycles.empty(), "good vertex without pendant cycles");

  std::set<VertexId> tree_vertices{x};
  std::vector<Edge> tree_edges;
  std::set<VertexId> removed;  // everything but x that leaves the smaller cactus
  for (const auto& cycle : good.pendant_cycles) {
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      ensure(g.degree(cycle[i]) == 2, "pendant cycle has a second vertex of degree above 2");
      removed.insert(cycle[i]);
    }
    tree_vertices.insert(cycle[1]);
    tree_vertices.insert(cycle.back());
    tree_edges.emplace_back(x, cycle[1]);
    tree_edges.emplace_back(x, cycle.back());
  }
  for (const auto& pt : good.pendant_trees) {
    tree_vertices.insert(pt.vertices.begin(), pt.vertices.end());
    tree_edges.insert(tree_edges.end(), pt.edges.begin(), pt.edges.end());
    for (VertexId v : pt.vertices)
      if (v != x) removed.insert(v);
  }
  TotalGraph tree(std::vector<VertexId>(tree_vertices.begin(), tree_vertices.end()), tree_edges);
  TotalGraph rest = remove_vertices(g, removed);
  ensure(rest.degree(x) <= 2, "good vertex keeps more than two edges");

  TotalColoring c = attach_pendant_tree(rest, solve(rest, stats), x, tree);
  for (const auto& cycle : good.pendant_cycles) {
    PendantCycleCase pc;
    pc.cycle = cycle;
    pc.kind = cycle_case_for_length(cycle.size());
    pc.x1_color = *c.vertex(cycle[1]);
    pc.xn_color = *c.vertex(cycle.back());
    bool fallback = false;
    c = extend_cycle_case(g, c, pc, &fallback);
    ++stats.cycles_extended;
    ++stats.case_counts[static_cast<int>(pc.kind)];
    if (fallback) ++stats.fallbacks;
  }
  return c;
}

}  // namespace

TotalColoring cactus_tlir2(const TotalGraph& g, CactusStats* stats) {
  if (!is_cactus(g)) throw PreconditionError("cactus_tlir2: graph is not a connected cactus");
  if (!g.all_full()) throw PreconditionError("cactus_tlir2: every vertex must be full");
  CactusStats local;
  TotalColoring c = solve(g, stats ? *stats : local);
  ensure(verify_tlir(g, c).valid(), "cactus coloring failed verification");
  ensure(c.num_colors() <= 2, "cactus coloring uses more than two colors");
  return c;
}

}  // namespace tlir

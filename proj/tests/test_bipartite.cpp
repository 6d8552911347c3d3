#include <doctest.h>

#include <random>
#include <set>

#include "tlir/bipartite.hpp"
#include "tlir/errors.hpp"
#include "tlir/graph.hpp"

using namespace tlir;

namespace {

TotalGraph random_bipartite(std::mt19937_64& rng, std::size_t a, std::size_t b, double p,
                            Bipartition& parts) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  parts = {};
  for (std::size_t i = 0; i < a; ++i) parts.x.push_back(static_cast<VertexId>(i));
  for (std::size_t j = 0; j < b; ++j) parts.y.push_back(static_cast<VertexId>(a + j));
  for (VertexId x : parts.x)
    for (VertexId y : parts.y)
      if (coin(rng)) edges.emplace_back(x, y);
  return make_graph(a + b, edges);
}

// Random tree on ids first..first+n-1 attached at `root`.
TotalGraph random_tree_at(std::mt19937_64& rng, VertexId root, VertexId first, std::size_t n) {
  std::vector<VertexId> ids{root};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId id = first + static_cast<VertexId>(i);
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    edges.emplace_back(ids[pick(rng)], id);
    ids.push_back(id);
  }
  return TotalGraph(ids, edges);
}

}  // namespace

TEST_CASE("bipartite_tlir2 examples") {
  auto k2 = bipartite_tlir2(path_graph(2), {{0}, {1}});
  CHECK(k2.edge({0, 1}) == kRed);
  CHECK(k2.vertex(0) == kRed);
  CHECK(k2.vertex(1) == kBlue);
  CHECK(total_color_degree(path_graph(2), k2, 0, kRed) == 2);
  CHECK(total_color_degree(path_graph(2), k2, 1, kRed) == 1);

  auto star = bipartite_tlir2(star_graph(2), {{0}, {1, 2}});
  CHECK(star.vertex(0) == kBlue);
  CHECK(star.vertex(1) == kBlue);
  CHECK(star.vertex(2) == kBlue);

  TotalGraph c4 = cycle_graph(4);
  auto cc = bipartite_tlir2(c4, {{0, 2}, {1, 3}});
  CHECK(cc.vertex(0) == kBlue);
  CHECK(cc.vertex(1) == kRed);
  CHECK(total_color_degree(c4, cc, 1, kRed) == 3);
  CHECK(total_color_degree(c4, cc, 2, kRed) == 2);
  CHECK(verify_tlir(c4, cc).valid());

  CHECK_THROWS_AS(bipartite_tlir2(cycle_graph(3)), PreconditionError);
  CHECK_THROWS_AS(bipartite_tlir2(c4, {{0, 1}, {2, 3}}), PreconditionError);
}

TEST_CASE("bipartite parity property") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Bipartition parts;
    TotalGraph g = random_bipartite(rng, 1 + trial % 6, 1 + trial % 5, 0.5, parts);
    auto c = bipartite_tlir2(g, parts);
    CHECK(verify_tlir(g, c).valid());
    for (const Edge& e : g.edges()) CHECK(c.edge(e) == kRed);
    for (VertexId x : parts.x) CHECK(total_color_degree(g, c, x, kRed) % 2 == 0);
    for (VertexId y : parts.y) CHECK(total_color_degree(g, c, y, kRed) % 2 == 1);
  }
}

TEST_CASE("partial_bipartite_tlir examples") {
  auto star = partial_bipartite_tlir(star_graph(2), {0}, {1, 2});
  CHECK(star.uncolored_edges.empty());
  CHECK(star.coloring.vertex(0) == kBlue);
  CHECK(star.coloring.edge({0, 1}) == kRed);

  // x1=0, y=1, x2=2
  auto path = partial_bipartite_tlir(path_graph(3), {0, 2}, {1});
  CHECK(path.uncolored_edges == std::vector<Edge>{Edge(0, 1)});
  CHECK(path.coloring.edge({1, 2}) == kRed);
  CHECK(path.coloring.vertex(0) == kBlue);
  CHECK(path.coloring.vertex(2) == kRed);
  CHECK_FALSE(path.coloring.vertex(1).has_value());

  // y=10 (degree 4) and y=11 (degree 2) both pick x=0.
  TotalGraph shared({0, 1, 2, 3, 10, 11},
                    {{0, 10}, {1, 10}, {2, 10}, {3, 10}, {0, 11}, {1, 11}});
  auto s = partial_bipartite_tlir(shared, {0, 1, 2, 3}, {10, 11});
  CHECK(s.coloring.edge({0, 10}) == kBlue);
  CHECK(s.coloring.edge({0, 11}) == kBlue);
  CHECK(s.uncolored_edges.empty());
  CHECK(verify_tlir(shared, s.coloring, false).valid());

  CHECK_THROWS_AS(partial_bipartite_tlir(make_graph(2, {}), {0}, {1}), PreconditionError);
}

TEST_CASE("partial_bipartite_tlir properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Bipartition parts;
    TotalGraph g = random_bipartite(rng, 1 + trial % 5, 1 + trial % 7, 0.6, parts);
    bool isolated_y = false;
    for (VertexId y : parts.y) isolated_y |= g.degree(y) == 0;
    if (isolated_y) continue;
    auto r = partial_bipartite_tlir(g, parts.x, parts.y, {3, 4});
    CHECK(verify_tlir(g, r.coloring, false).valid());
    std::set<VertexId> matched;
    for (const Edge& e : r.uncolored_edges) {
      CHECK(matched.insert(e.u).second);
      CHECK(matched.insert(e.v).second);
      CHECK_FALSE(r.coloring.edge(e).has_value());
    }
    std::size_t colored_edges = r.coloring.edge_colors().size();
    CHECK(colored_edges + r.uncolored_edges.size() == g.num_edges());
    for (VertexId x : parts.x) {
      CHECK(r.coloring.vertex(x).has_value());
      CHECK(total_color_degree(g, r.coloring, x, 3) % 2 == 0);
    }
    for (VertexId y : parts.y) {
      CHECK_FALSE(r.coloring.vertex(y).has_value());
      CHECK(total_color_degree(g, r.coloring, y, 3) % 2 == 1);
    }
  }
}

TEST_CASE("attach_pendant_tree examples") {
  TotalGraph single({0}, {});
  TotalColoring red;
  red.set_vertex(0, kRed);
  TotalGraph k2({0, 1}, {{0, 1}});
  auto a = attach_pendant_tree(single, red, 0, k2);
  CHECK(a.vertex(0) == kRed);
  CHECK(verify_tlir(k2, a).valid());

  TotalGraph c4 = cycle_graph(4);
  auto base = bipartite_tlir2(c4);
  for (VertexId v = 0; v < 4; ++v) {
    TotalGraph p({v, 10, 11}, {{v, 10}, {10, 11}});
    auto out = attach_pendant_tree(c4, base, v, p);
    CHECK(verify_tlir(graph_union(c4, p), out).valid());
    CHECK(out.edge({v, 10}) == out.edge({10, 11}));
  }

  TotalGraph p3 = path_graph(3);
  TotalColoring mixed;
  mixed.set_edge({0, 1}, kRed);
  mixed.set_edge({1, 2}, kBlue);
  mixed.set_vertex(0, kBlue);
  mixed.set_vertex(1, kRed);
  mixed.set_vertex(2, kBlue);
  REQUIRE(verify_tlir(p3, mixed).valid());
  TotalGraph star({1, 10, 11, 12}, {{1, 10}, {1, 11}, {1, 12}});
  auto out = attach_pendant_tree(p3, mixed, 1, star);
  CHECK(verify_tlir(graph_union(p3, star), out).valid());
  CHECK(out.edge({1, 10}) == out.edge({1, 11}));
  CHECK(out.edge({1, 11}) == out.edge({1, 12}));
  CHECK(out.vertex(10) == out.vertex(11));

  CHECK(attach_pendant_tree(p3, mixed, 1, TotalGraph({1}, {})) == mixed);
  CHECK_THROWS_AS(attach_pendant_tree(star_graph(3), bipartite_tlir2(star_graph(3)), 0,
                                      TotalGraph({0, 9}, {{0, 9}})),
                  PreconditionError);
  CHECK_THROWS_AS(attach_pendant_tree(p3, mixed, 1, TotalGraph({1, 2}, {{1, 2}})), InputError);
}

TEST_CASE("attach_pendant_tree on random bases") {
  std::mt19937_64 rng(99);
  int attached = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Bipartition parts;
    TotalGraph g = random_bipartite(rng, 3, 3, 0.5, parts);
    // Flip one edge to blue when that stays valid, so both colors can meet at v.
    TotalColoring c = bipartite_tlir2(g, parts);
    if (g.num_edges() > 0 && trial % 2 == 1) {
      TotalColoring d = c;
      d.set_edge(g.edges()[trial % g.num_edges()], kBlue);
      if (verify_tlir(g, d).valid()) c = d;
    }
    for (VertexId v : g.vertices()) {
      if (g.degree(v) > 2) continue;
      TotalGraph t = random_tree_at(rng, v, 100, 1 + trial % 6);
      auto out = attach_pendant_tree(g, c, v, t);
      TotalGraph joined = graph_union(g, t);
      CHECK(verify_tlir(joined, out).valid());
      std::set<Color> tree_edge_colors;
      for (const Edge& e : t.edges()) tree_edge_colors.insert(*out.edge(e));
      CHECK(tree_edge_colors.size() == 1);
      for (const Edge& e : g.edges()) CHECK(out.edge(e) == c.edge(e));
      ++attached;
      break;
    }
  }
  CHECK(attached > 50);
}

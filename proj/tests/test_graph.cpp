#include <doctest.h>

#include "tlir/errors.hpp"
#include "tlir/graph.hpp"

using namespace tlir;

TEST_CASE("total degree counts edges plus fullness") {
  TotalGraph g({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}, {0, 3});
  CHECK(total_degree(g, 0) == 3);  // empty, 3 edges
  CHECK(total_degree(g, 1) == 2);
  CHECK(total_degree(g, 3) == 1);

  TotalGraph isolated({5}, {}, {5});
  CHECK(total_degree(isolated, 5) == 0);

  TotalGraph p3 = path_graph(3);
  CHECK(total_degree(p3, 1) == 3);
  CHECK_THROWS_AS(total_degree(p3, 9), InputError);
}

TEST_CASE("degree sum identity") {
  TotalGraph g({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}, {2, 4});
  std::size_t sum = 0;
  for (VertexId v : g.vertices()) sum += total_degree(g, v);
  CHECK(sum == 2 * g.num_edges() + 3);
}

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(TotalGraph({0, 0}, {}), InputError);
  CHECK_THROWS_AS(TotalGraph({-1}, {}), InputError);
  CHECK_THROWS_AS(TotalGraph({0, 1}, {{0, 0}}), InputError);
  CHECK_THROWS_AS(TotalGraph({0, 1}, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(TotalGraph({0, 1}, {{0, 2}}), InputError);
  CHECK_THROWS_AS(TotalGraph({0, 1}, {}, {7}), InputError);
}

TEST_CASE("sparse ids and subgraphs keep parent ids") {
  TotalGraph g({10, 20, 30}, {{30, 10}, {10, 20}});
  CHECK(g.edges()[0] == Edge(10, 20));
  CHECK(g.degree(10) == 2);
  CHECK(g.max_id() == 30);
  TotalGraph h = remove_vertices(g, {10});
  CHECK(h.num_vertices() == 2);
  CHECK(h.num_edges() == 0);
  CHECK(connected_components(h).size() == 2);
  CHECK(is_connected(g));
}

TEST_CASE("with_edges and union") {
  TotalGraph p = path_graph(4);
  TotalGraph c = with_edges(p, {{0, 3}});
  CHECK(c == cycle_graph(4));
  CHECK(with_edges(c, {}, {{0, 3}}) == p);
  CHECK_THROWS_AS(with_edges(p, {{0, 1}}), InputError);
  TotalGraph u = graph_union(path_graph(2), TotalGraph({1, 2}, {{1, 2}}));
  CHECK(u == path_graph(3));
}

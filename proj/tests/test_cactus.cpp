#include <doctest.h>

#include "tlir/bipartite.hpp"
#include "tlir/cactus.hpp"
#include "tlir/errors.hpp"
#include "tlir/generators.hpp"
#include "tlir/oracle.hpp"

using namespace tlir;

namespace {

// Cycle (0, 1, ..., len-1) with `leaves` pendant vertices hung at 0.
TotalGraph cycle_with_leaves(std::size_t len, std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (std::size_t j = 0; j < leaves; ++j) edges.emplace_back(0, len + j);
  return make_graph(len + leaves, edges);
}

// Colors the opened graph: x = 0 with its leaves and the stubs 0-1 and
// 0-(len-1), all tree edges blue, x colored `x_color`.
TotalColoring opened_coloring(std::size_t len, std::size_t leaves, Color x_color) {
  std::vector<Edge> edges{{0, 1}, {0, static_cast<VertexId>(len - 1)}};
  std::vector<VertexId> ids{0, 1, static_cast<VertexId>(len - 1)};
  for (std::size_t j = 0; j < leaves; ++j) {
    edges.emplace_back(0, len + j);
    ids.push_back(static_cast<VertexId>(len + j));
  }
  return tree_parity_coloring(TotalGraph(ids, edges), 0, x_color, kBlue);
}

PendantCycleCase case_for(std::size_t len, const TotalColoring& c) {
  PendantCycleCase pc;
  for (std::size_t i = 0; i < len; ++i) pc.cycle.push_back(static_cast<VertexId>(i));
  pc.kind = cycle_case_for_length(len);
  pc.x1_color = *c.vertex(1);
  pc.xn_color = *c.vertex(static_cast<VertexId>(len - 1));
  return pc;
}

void check_cactus(const TotalGraph& g) {
  TotalColoring c = cactus_tlir2(g);
  CHECK(verify_tlir(g, c).valid());
  CHECK(c.num_colors() <= 2);
}

}  // namespace

TEST_CASE("cycle case tags cover every length") {
  CHECK(cycle_case_for_length(3) == CycleCase::kLength3);
  CHECK(cycle_case_for_length(5) == CycleCase::kLength5);
  CHECK(cycle_case_for_length(4) == CycleCase::kEven);
  CHECK(cycle_case_for_length(10) == CycleCase::kEven);
  CHECK(cycle_case_for_length(7) == CycleCase::kOddAtLeast7);
  CHECK(cycle_case_for_length(13) == CycleCase::kOddAtLeast7);
  CHECK_THROWS_AS(cycle_case_for_length(2), InputError);
}

TEST_CASE("cactus examples") {
  check_cactus(cycle_graph(3));
  check_cactus(butterfly_graph());
  check_cactus(bowtie_graph());
  check_cactus(cycle_graph(7));
  for (std::size_t n = 3; n <= 12; ++n) check_cactus(cycle_graph(n));
  check_cactus(path_graph(1));
  check_cactus(path_graph(2));
  check_cactus(star_graph(4));
  CHECK(exact_tlir(cycle_graph(3), {}).value == 2);
}

TEST_CASE("cactus preconditions") {
  CHECK_THROWS_AS(cactus_tlir2(complete_graph(4)), PreconditionError);
  CHECK_THROWS_AS(cactus_tlir2(make_graph(3, {{0, 1}})), PreconditionError);
  TotalGraph partly_empty({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}, {2});
  CHECK_THROWS_AS(cactus_tlir2(partly_empty), PreconditionError);
}

TEST_CASE("even cycle extension follows the path rule") {
  // Cycle of length 6, so n = 5 is odd.
  const std::size_t len = 6;
  TotalGraph g = cycle_with_leaves(len, 1);
  for (Color xc : {kRed, kBlue}) {
    TotalColoring c = opened_coloring(len, 1, xc);
    bool fallback = true;
    TotalColoring out = extend_cycle_case(g, c, case_for(len, c), &fallback);
    CHECK_FALSE(fallback);
    CHECK(verify_tlir(g, out).valid());
    for (VertexId i = 1; i < 5; ++i) CHECK(out.edge({i, i + 1}) == kRed);
    CHECK(out.vertex(2) == kRed);
    CHECK(out.vertex(3) == kBlue);
    CHECK(out.vertex(4) == kRed);
  }
}

TEST_CASE("triangle extension when x has blue degree other than 2") {
  // Two leaves: x has 4 blue edges in the opened graph.
  TotalGraph g = cycle_with_leaves(3, 2);
  TotalColoring c = opened_coloring(3, 2, kRed);
  REQUIRE(total_color_degree(g, c, 0, kBlue) != 2);
  bool fallback = true;
  TotalColoring out = extend_cycle_case(g, c, case_for(3, c), &fallback);
  CHECK_FALSE(fallback);
  CHECK(out.vertex(1) == kBlue);
  CHECK(out.edge({1, 2}) == kRed);
  CHECK(out.vertex(2) == kRed);
  CHECK(verify_tlir(g, out).valid());
}

TEST_CASE("odd cycle extension with both ends blue") {
  const std::size_t len = 7;
  TotalGraph g = cycle_with_leaves(len, 1);
  // Leaves of the opened tree take the edge color when x sits on the even side.
  TotalColoring c = opened_coloring(len, 1, kRed);
  REQUIRE(c.vertex(1) == kBlue);
  REQUIRE(c.vertex(6) == kBlue);
  bool fallback = true;
  TotalColoring out = extend_cycle_case(g, c, case_for(len, c), &fallback);
  CHECK_FALSE(fallback);
  for (VertexId i = 1; i < 6; ++i) CHECK(out.edge({i, i + 1}) == kRed);
  CHECK(out.vertex(3) == kBlue);
  CHECK(out.vertex(5) == kBlue);
  CHECK(out.vertex(2) == kRed);
  CHECK(out.vertex(4) == kRed);
  CHECK(verify_tlir(g, out).valid());
}

TEST_CASE("every case extends on small cycles with pendant leaves") {
  for (std::size_t len = 3; len <= 11; ++len)
    for (std::size_t leaves = 0; leaves <= 3; ++leaves)
      for (Color xc : {kRed, kBlue}) {
        CAPTURE(len);
        CAPTURE(leaves);
        TotalGraph g = cycle_with_leaves(len, leaves);
        TotalColoring c = opened_coloring(len, leaves, xc);
        TotalColoring out = extend_cycle_case(g, c, case_for(len, c));
        CHECK(verify_tlir(g, out).valid());
        CHECK(out.num_colors() <= 2);
      }
}

TEST_CASE("random cacti") {
  CactusStats stats;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    TotalGraph g = random_cactus(3 + seed % 38, rng);
    CAPTURE(seed);
    TotalColoring c = cactus_tlir2(g, &stats);
    CHECK(verify_tlir(g, c).valid());
    CHECK(c.num_colors() <= 2);
  }
  CHECK(stats.cycles_extended > 0);
  CHECK(stats.tree_splits > 0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(stats.case_counts[k] > 0);
  MESSAGE("fallbacks: " << stats.fallbacks << " of " << stats.cycles_extended);
}

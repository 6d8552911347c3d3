#include <doctest.h>

#include <algorithm>

#include "tlir/errors.hpp"
#include "tlir/generators.hpp"
#include "tlir/independent.hpp"
#include "tlir/oracle.hpp"
#include "tlir/structure.hpp"
#include "tlir/subcubic.hpp"

using namespace tlir;

namespace {

// Best (size, -|S cap avoid|) over all subsets.
std::pair<std::size_t, std::size_t> brute_mis(const TotalGraph& g, const std::set<VertexId>& avoid) {
  const std::size_t n = g.num_vertices();
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(g.vertices()[i]);
    if (!is_independent(g, s)) continue;
    std::size_t hits = 0;
    for (VertexId v : s) hits += avoid.count(v);
    if (s.size() > best.first || (s.size() == best.first && hits < best.second))
      best = {s.size(), hits};
  }
  return best;
}

TotalGraph w_gadget() {
  return make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// Two 4-cycles 0-1-2-3 and 4-5-6-7 joined by 0-4 and 3-7.
TotalGraph two_squares() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {3, 7}});
}

void check_layer_targets(const TotalGraph& g, const TotalColoring& c, const Layering& layering,
                         std::size_t d) {
  for (VertexId v : g.vertices())
    CHECK(total_color_degree(g, c, v, kRed) == d + 1 - layering.index.at(v));
}

}  // namespace

TEST_CASE("maximum independent set agrees with enumeration") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng.below(12);
    TotalGraph g = random_connected(n, 0.1 + 0.4 * rng.unit(), rng);
    std::set<VertexId> avoid;
    for (VertexId v : g.vertices())
      if (rng.chance(0.4)) avoid.insert(v);
    auto s = max_independent_set(g, avoid);
    CHECK(is_independent(g, s));
    std::size_t hits = 0;
    for (VertexId v : s) hits += avoid.count(v);
    CHECK(std::make_pair(s.size(), hits) == brute_mis(g, avoid));
  }
  CHECK(max_independent_set(cycle_graph(7)).size() == 3);
  CHECK(max_independent_set(complete_graph(5)).size() == 1);
}

TEST_CASE("layered coloring of regular graphs") {
  TotalGraph k2 = path_graph(2);
  TotalColoring c = regular_layered_tlir2(k2);
  CHECK(c.edge({0, 1}) == kRed);
  CHECK(verify_tlir(k2, c).valid());
  CHECK(std::set<Color>{*c.vertex(0), *c.vertex(1)} == std::set<Color>{kRed, kBlue});

  TotalGraph k4 = complete_graph(4);
  Layering l4 = build_layering(k4);
  CHECK(l4.layers.size() == 4);
  TotalColoring c4 = regular_layered_tlir2(k4, l4);
  CHECK(verify_tlir(k4, c4).valid());
  check_layer_targets(k4, c4, l4, 3);

  TotalGraph c5 = cycle_graph(5);
  Layering l5 = build_layering(c5);
  REQUIRE(l5.layers.size() == 3);
  CHECK(l5.layers[0].size() == 2);
  CHECK(l5.layers[1].size() == 2);
  CHECK(l5.layers[2].size() == 1);
  TotalColoring cc = regular_layered_tlir2(c5, l5);
  CHECK(verify_tlir(c5, cc).valid());
  check_layer_targets(c5, cc, l5, 2);

  CHECK(regular_layered_tlir2(path_graph(1)).vertex(0) == kRed);
  CHECK_THROWS_AS(regular_layered_tlir2(path_graph(3)), PreconditionError);
}

TEST_CASE("layered coloring on random regular graphs") {
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      std::size_t n = d + 1 + seed % 10;
      if ((n * d) % 2) ++n;
      Rng rng(seed * 7 + d);
      TotalGraph g = random_regular(n, d, rng);
      Layering layering = build_layering(g);
      TotalColoring c = regular_layered_tlir2(g, layering);
      CHECK(verify_tlir(g, c).valid());
      check_layer_targets(g, c, layering, d);
    }
}

TEST_CASE("find_reduction examples") {
  // K4 with edge 0-1 replaced by the path 0-4-5-1: 4 and 5 are adjacent 2-vertices.
  TotalGraph subdivided = make_graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 1}});
  Reduction r = find_reduction(subdivided);
  CHECK(r.kind == ReductionKind::kAdjacentTwoVertices);
  CHECK(r.reduced == complete_graph(4));
  CHECK(undo_reduction(r) == subdivided);

  Reduction sq = find_reduction(two_squares());
  CHECK(sq.kind == ReductionKind::kFourCycle);
  CHECK(sq.reduced.num_vertices() == 6);
  CHECK(undo_reduction(sq) == two_squares());

  // Square 3-4-5-6 hanging from 3; vertex 7 is an isolated 2-vertex.
  TotalGraph pendant_square =
      make_graph(8, {{0, 1}, {0, 2}, {1, 2}, {1, 7}, {2, 7}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  Reduction ps = find_reduction(pendant_square);
  CHECK(ps.kind == ReductionKind::kPendantFourCycle);
  CHECK(ps.path == std::vector<VertexId>{3, 4, 5, 6});
  CHECK(undo_reduction(ps) == pendant_square);

  TotalGraph pendant_triangle = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}});
  Reduction pt = find_reduction(pendant_triangle);
  CHECK(pt.kind == ReductionKind::kPendantTriangle);
  CHECK(pt.path == std::vector<VertexId>{0, 1, 2, 0});
  CHECK(undo_reduction(pt) == pendant_triangle);

  TotalGraph k4_with_triangle = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  Reduction leaf = find_reduction(k4_with_triangle);
  CHECK(leaf.kind == ReductionKind::kPendantTree);
  CHECK(leaf.anchor == 3);
  CHECK(undo_reduction(leaf) == k4_with_triangle);

  TotalGraph w = w_gadget();
  Reduction gadget = find_reduction(w);
  CHECK(gadget.kind == ReductionKind::kGadgets);
  REQUIRE(gadget.gadgets.size() == 1);
  CHECK(gadget.gadgets[0].x == 0);
  CHECK(gadget.reduced.num_vertices() == 10);
  for (VertexId v : gadget.reduced.vertices()) CHECK(gadget.reduced.degree(v) == 3);
  CHECK(undo_reduction(gadget) == w);

  CHECK(find_reduction(complete_graph(4)).kind == ReductionKind::kNone);
  CHECK(find_reduction(cycle_graph(6)).kind == ReductionKind::kNone);
  CHECK(find_reduction(path_graph(1)).kind == ReductionKind::kNone);
  CHECK_THROWS_AS(find_reduction(star_graph(4)), PreconditionError);
}

TEST_CASE("each reduction kind appears and undoes") {
  std::map<ReductionKind, int> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    TotalGraph g = random_subcubic(4 + seed % 20, rng.unit(), rng);
    Reduction r = find_reduction(g);
    ++seen[r.kind];
    CAPTURE(static_cast<int>(r.kind));
    CHECK(undo_reduction(r) == g);
    if (r.kind != ReductionKind::kNone)
      CHECK(std::make_pair(subcubic_deficit(r.reduced), r.reduced.num_vertices()) <
            std::make_pair(subcubic_deficit(g), g.num_vertices()));
  }
  for (auto kind : {ReductionKind::kPendantTree, ReductionKind::kAdjacentTwoVertices,
                    ReductionKind::kGadgets})
    CHECK(seen[kind] > 0);
}

TEST_CASE("subcubic examples") {
  for (const TotalGraph& g : {cycle_graph(3), complete_graph(4), w_gadget(), two_squares(),
                              cycle_graph(4), path_graph(5), path_graph(1), star_graph(3)}) {
    TotalColoring c = subcubic_tlir2(g);
    CHECK(verify_tlir(g, c).valid());
    CHECK(c.num_colors() <= 2);
  }
  TotalGraph pendant_triangle = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(verify_tlir(pendant_triangle, subcubic_tlir2(pendant_triangle)).valid());
  CHECK_THROWS_AS(subcubic_tlir2(star_graph(4)), PreconditionError);
}

TEST_CASE("random subcubic graphs") {
  SubcubicStats stats;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::size_t n = 2 + seed % 29;
    TotalGraph g = random_subcubic(n, rng.unit(), rng);
    CAPTURE(seed);
    TotalColoring c = subcubic_tlir2(g, &stats);
    CHECK(verify_tlir(g, c).valid());
    CHECK(c.num_colors() <= 2);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(1000 + seed);
    TotalGraph g = random_regular(4 + 2 * (seed % 14), 3, rng);
    TotalColoring c = subcubic_tlir2(g, &stats);
    CHECK(verify_tlir(g, c).valid());
  }
  CHECK(stats.gadgets_removed > 0);
  for (auto kind : {ReductionKind::kPendantTree, ReductionKind::kAdjacentTwoVertices,
                    ReductionKind::kFourCycle, ReductionKind::kPendantFourCycle,
                    ReductionKind::kPendantTriangle, ReductionKind::kGadgets})
    CHECK(stats.reductions[kind] > 0);
  MESSAGE("gadgets " << stats.gadgets_removed << ", recolored " << stats.gadget_recolorings
                     << ", fallbacks " << stats.gadget_fallbacks);
  for (const auto& [kind, count] : stats.reductions)
    MESSAGE("reduction " << static_cast<int>(kind) << ": " << count);
}

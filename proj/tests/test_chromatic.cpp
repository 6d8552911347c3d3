#include <doctest.h>

#include <map>

#include "tlir/bipartite.hpp"
#include "tlir/chromatic.hpp"
#include "tlir/errors.hpp"
#include "tlir/generators.hpp"

using namespace tlir;

namespace {

// Proper coloring check and neighbor condition, written out directly.
bool classes_ok(const TotalGraph& g, const ProperClasses& p) {
  std::size_t covered = 0;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    covered += p.classes[i].size();
    for (VertexId v : p.classes[i])
      for (std::size_t j = 0; j <= i; ++j) {
        bool has = false;
        for (VertexId w : p.classes[j]) has |= g.has_edge(v, w);
        if (j == i && has) return false;
        if (j < i && !has) return false;
      }
  }
  return covered == g.num_vertices();
}

// Brute-force chromatic number for tiny graphs.
std::size_t brute_chi(const TotalGraph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> col(n, 0);
    while (true) {
      bool ok = true;
      for (const Edge& e : g.edges()) ok &= col[g.index_of(e.u)] != col[g.index_of(e.v)];
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("maximal proper classes examples") {
  TotalGraph c6 = cycle_graph(6);
  ProperClasses bip = maximal_proper_classes(c6);
  CHECK(bip.classes.size() == 2);
  CHECK(classes_ok(c6, bip));

  ProperClasses k4 = maximal_proper_classes(complete_graph(4));
  CHECK(k4.classes.size() == 4);
  for (const auto& cls : k4.classes) CHECK(cls.size() == 1);

  TotalGraph c5 = cycle_graph(5);
  ProperClasses odd = maximal_proper_classes(c5);
  CHECK(odd.classes.size() == 3);
  CHECK(classes_ok(c5, odd));

  CHECK_THROWS_AS(maximal_proper_classes(c5, 2), PreconditionError);
  CHECK(maximal_proper_classes(c5, 4).classes.size() <= 4);
}

TEST_CASE("chromatic number matches brute force") {
  Rng rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    TotalGraph g = random_connected(1 + rng.below(7), rng.unit(), rng);
    const std::size_t chi = brute_chi(g);
    CHECK(chromatic_number(g) == chi);
    ProperClasses p = maximal_proper_classes(g);
    CHECK(p.classes.size() == chi);
    CHECK(classes_ok(g, p));
    ProperClasses greedy = maximal_proper_classes(g, g.num_vertices());
    CHECK(classes_ok(g, greedy));
  }
}

TEST_CASE("chromatic_tlir examples") {
  TotalGraph c6 = cycle_graph(6);
  TotalColoring two = chromatic_tlir(c6);
  CHECK(verify_tlir(c6, two).valid());
  CHECK(two.num_colors() <= 2);

  TotalGraph c5 = cycle_graph(5);
  TotalColoring four = chromatic_tlir(c5);
  CHECK(verify_tlir(c5, four).valid());
  CHECK(four.num_colors() <= 4);

  TotalGraph k4 = complete_graph(4);
  TotalColoring six = chromatic_tlir(k4);
  CHECK(verify_tlir(k4, six).valid());
  CHECK(six.num_colors() <= 6);

  TotalGraph edgeless = make_graph(3, {});
  TotalColoring one = chromatic_tlir(edgeless);
  CHECK(one.vertex(1) == 1);
  CHECK(verify_tlir(edgeless, one).valid());
}

TEST_CASE("two classes give the bipartite parity coloring") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    TotalGraph g = random_tree(2 + rng.below(15), rng);
    ProperClasses p = maximal_proper_classes(g);
    REQUIRE(p.classes.size() == 2);
    TotalColoring c = chromatic_tlir(g, p);
    CHECK(c == bipartite_tlir2(g, Bipartition{p.classes[0], p.classes[1]}));
  }
}

TEST_CASE("chromatic_tlir on random graphs of each chromatic number") {
  std::map<std::size_t, int> count;
  Rng rng(77);
  ChromaticStats total;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + rng.below(11);
    TotalGraph g = random_connected(n, rng.unit() * 0.8, rng);
    ChromaticStats stats;
    TotalColoring c = chromatic_tlir(g, &stats);
    CHECK(verify_tlir(g, c).valid());
    CHECK(c.num_colors() <= 2 * stats.classes - 2);
    ++count[stats.classes];
    total.recolored_y += stats.recolored_y;
    total.leftover_edges += stats.leftover_edges;
  }
  for (std::size_t k = 2; k <= 5; ++k) CHECK(count[k] > 0);
  CHECK(total.leftover_edges > 0);
}

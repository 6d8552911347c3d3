// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "tlir/acyclic.hpp"
#include "tlir/bipartite.hpp"
#include "tlir/cactus.hpp"
#include "tlir/chromatic.hpp"
#include "tlir/errors.hpp"
#include "tlir/generators.hpp"
#include "tlir/oracle.hpp"
#include "tlir/split.hpp"
#include "tlir/structure.hpp"
#include "tlir/subcubic.hpp"
#include "tlir/sweep.hpp"

using namespace tlir;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kSweepSeconds = 60.0;
constexpr double kStretchSeconds = 1800.0;
constexpr double kCactusSecondsPerInstance = 1.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %-22s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool valid_with(const TotalGraph& g, const TotalColoring& c, std::size_t max_colors) {
  return verify_tlir(g, c).valid() && c.num_colors() <= max_colors;
}

Outcome conjecture_sweep() {
  auto start = Clock::now();
  SweepResult r = sweep_parallel(5);
  double t = seconds_since(start);
  std::size_t graphs = r.entries.size();
  auto stretch_start = Clock::now();
  SweepResult six = sweep_parallel(6);
  double t6 = seconds_since(stretch_start);
  std::size_t at6 = six.graphs_per_n[6];
  bool pass = graphs == 31 && r.holds() && t < kSweepSeconds && six.holds() && at6 == 112 &&
              t6 < kStretchSeconds;
  return {pass, fmt("%zu graphs <= 5 vertices, max tlir %d, %.3fs (< %.0fs); stretch n=6: %zu graphs, "
                    "max %d, %.3fs",
                    graphs, r.max_tlir, t, kSweepSeconds, at6, six.max_tlir, t6)};
}

Outcome cactus() {
  Rng rng(101);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    TotalGraph g = random_cactus(rng.between(4, 40), rng);
    auto start = Clock::now();
    TotalColoring c = cactus_tlir2(g);
    worst = std::max(worst, seconds_since(start));
    bad += !valid_with(g, c, 2);
  }
  return {bad == 0 && worst < kCactusSecondsPerInstance,
          fmt("200 cacti, 4 <= n <= 40: %d failures, slowest %.4fs (< %.0fs)", bad, worst,
              kCactusSecondsPerInstance)};
}

Outcome subcubic() {
  Rng rng(202);
  int bad = 0, cubic = 0;
  for (int i = 0; i < 200; ++i) {
    TotalGraph g;
    if (i % 4 == 0) {
      g = random_regular(2 * rng.between(2, 15), 3, rng);
    } else {
      g = random_subcubic(rng.between(2, 30), rng.unit(), rng);
    }
    bool is_cubic = true;
    for (VertexId v : g.vertices()) is_cubic = is_cubic && g.degree(v) == 3;
    cubic += is_cubic;
    bad += !valid_with(g, subcubic_tlir2(g), 2);
  }
  return {bad == 0 && cubic >= 50, fmt("200 subcubic, n <= 30, %d cubic: %d failures", cubic, bad)};
}

Outcome split() {
  Rng rng(303);
  std::map<SplitRoute, int> routes;
  int bad = 0, made = 0;
  while (made < 100) {
    TotalGraph g;
    switch (made % 5) {
      case 0: {  // single pendant vertex, n in {6,7,8}
        std::size_t n = rng.between(6, 8);
        std::size_t y = n == 8 ? rng.between(1, 2) : 1;  // needs |Y| < floor(|X| / 2)
        g = random_split(n - y, y, SplitProfile::kSinglePendantVertex, rng);
        break;
      }
      case 1: {  // two pendants, n in {6,7,8}
        std::size_t n = rng.between(6, 8);
        std::size_t y = rng.between(1, 2);
        g = random_split(n - y, y, SplitProfile::kTwoPendants, rng);
        break;
      }
      case 2:
        g = random_split(rng.between(3, 8), rng.between(1, 5), SplitProfile::kRandom, rng);
        break;
      case 3:
        g = random_split(rng.between(1, 2), rng.between(1, 4), SplitProfile::kRandom, rng);
        break;
      default:
        g = random_split(rng.between(2, 8), rng.chance(0.5) ? 0 : 1, SplitProfile::kRandom, rng);
        break;
    }
    if (!is_connected(g)) continue;
    ++made;
    SplitStats stats;
    bad += !valid_with(g, split_tlir2(g, &stats), 2);
    ++routes[stats.route];
  }
  int covered = 0;
  for (auto r : {SplitRoute::kTree, SplitRoute::kComplete, SplitRoute::kSinglePendant,
                 SplitRoute::kTwoPendants, SplitRoute::kEdgeColoring})
    covered += routes[r] > 0;
  return {bad == 0 && covered == 5,
          fmt("100 split graphs: %d failures; routes tree %d, complete %d, single pendant %d, two "
              "pendants %d, edge coloring %d",
              bad, routes[SplitRoute::kTree], routes[SplitRoute::kComplete],
              routes[SplitRoute::kSinglePendant], routes[SplitRoute::kTwoPendants],
              routes[SplitRoute::kEdgeColoring])};
}

Outcome chromatic() {
  Rng rng(404);
  std::map<std::size_t, int> by_chi;
  int bad = 0, made = 0, tries = 0;
  while (made < 100 && tries < 100000) {
    ++tries;
    TotalGraph g = random_connected(rng.between(4, 12), rng.unit() * 0.8, rng);
    std::size_t chi = chromatic_number(g);
    if (chi < 2 || chi > 5 || by_chi[chi] >= 25) continue;
    ++by_chi[chi];
    ++made;
    bad += !valid_with(g, chromatic_tlir(g), 2 * chi - 2);
  }
  return {bad == 0 && made == 100,
          fmt("%d graphs, n <= 12, chi 2/3/4/5 = %d/%d/%d/%d: %d failures", made, by_chi[2], by_chi[3],
              by_chi[4], by_chi[5], bad)};
}

Outcome outerplanar() {
  Rng rng(505);
  int bad = 0;
  OuterplanarRoute route;
  for (int i = 0; i < 100; ++i) {
    TotalGraph g = random_maximal_outerplanar(rng.between(3, 50), rng);
    TotalColoring c = outerplanar_tlir3(g, &route);
    bad += !valid_with(g, c, 3) || route != OuterplanarRoute::kPeel;
  }
  int bad_search = 0;
  for (int i = 0; i < 20; ++i) {
    TotalGraph g = random_outerplanar(rng.between(3, 12), rng);
    TotalColoring c = outerplanar_tlir3(g, &route);
    bad_search += !valid_with(g, c, 3) || route != OuterplanarRoute::kSearch || is_maximal_outerplanar(g);
  }
  return {bad == 0 && bad_search == 0,
          fmt("100 maximal (peel route, n <= 50): %d failures; 20 non-maximal (search route, n <= 12): "
              "%d failures",
              bad, bad_search)};
}

Outcome planar() {
  Rng rng(606);
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    TotalGraph g = random_planar_triangulation(rng.between(4, 12), rng);
    VertexColoring vc;
    TotalColoring c = planar_tlir_k(g, 5, AcyclicHypothesis::kPlanar, {}, &vc);
    std::set<Color> used;
    for (const auto& [v, k] : vc) used.insert(k);
    AcyclicSearchResult exact = exact_acyclic(g, SearchBudget{5});
    bool ok = valid_with(g, c, 5) && !verify_acyclic(g, vc) && exact.status == SearchStatus::kFound &&
              exact.value <= static_cast<int>(used.size());
    bad += !ok;
  }
  return {bad == 0, fmt("20 triangulations, n <= 12: %d failures", bad)};
}

Outcome anchors() {
  SearchBudget wide{8};
  TlirSearchResult lir_bowtie = exact_lir(bowtie_graph(), wide);
  TlirSearchResult lir_k2 = exact_lir(path_graph(2), wide);
  TlirSearchResult tlir_p4 = exact_tlir(path_graph(4), wide);
  TlirSearchResult tlir_bowtie = exact_tlir(bowtie_graph(), wide);
  AcyclicSearchResult acyclic_k4 = exact_acyclic(complete_graph(4), wide);
  bool pass = lir_bowtie.status == SearchStatus::kFound && lir_bowtie.value == 4 &&
              lir_k2.status == SearchStatus::kUncolorable && tlir_p4.value == 2 &&
              tlir_bowtie.value == 2 && acyclic_k4.value == 4;
  return {pass, fmt("lir(bowtie) %d, lir(K2) %s, tlir(P4) %d, tlir(bowtie) %d, acyclic(K4) %d",
                    lir_bowtie.value,
                    lir_k2.status == SearchStatus::kUncolorable ? "uncolorable" : "colorable",
                    tlir_p4.value, tlir_bowtie.value, acyclic_k4.value)};
}

Outcome bipartite_parity() {
  Rng rng(707);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    TotalGraph g = random_bipartite(rng.between(1, 30), rng.unit(), rng);
    Bipartition parts = *find_bipartition(g);
    TotalColoring c = bipartite_tlir2(g, parts);
    bool ok = verify_tlir(g, c).valid();
    std::map<VertexId, std::size_t> red;
    for (const Edge& e : g.edges()) {
      ok = ok && c.edge(e) == kRed;
      ++red[e.u];
      ++red[e.v];
    }
    for (VertexId v : g.vertices()) red[v] += c.vertex(v) == kRed;
    for (VertexId x : parts.x) ok = ok && red[x] % 2 == 0;
    for (VertexId y : parts.y) ok = ok && red[y] % 2 == 1;
    bad += !ok;
  }
  return {bad == 0, fmt("500 bipartite graphs: %d failures", bad)};
}

Outcome acyclic_conversion() {
  Rng rng(808);
  int bad = 0, pairs = 0;
  while (pairs < 200) {
    TotalGraph g = random_connected(rng.between(2, 12), rng.unit() * 0.5, rng);
    AcyclicSearchResult r = exact_acyclic(g, SearchBudget{13});
    if (r.status != SearchStatus::kFound) continue;
    ++pairs;
    for (int k = 0; k < 5; ++k) {
      RootChooser chooser = [&rng](const std::vector<VertexId>& comp) { return comp[rng.below(comp.size())]; };
      EdgeColoring ec = star_from_acyclic(g, r.witness, chooser);
      bool ok = verify_star(g, ec, &r.witness).valid();
      ok = ok && verify_tlir(g, acyclic_to_tlir(g, r.witness, chooser)).valid();
      bad += !ok;
    }
  }
  return {bad == 0, fmt("200 graphs x 5 root choices, n <= 12: %d failures", bad)};
}

Outcome lift() {
  Rng rng(909);
  int bad = 0, witnesses = 0;
  while (witnesses < 100) {
    TotalGraph g = random_connected(rng.between(3, 9), rng.unit() * 0.7, rng);
    TlirSearchResult r = exact_lir(g, SearchBudget{6});
    if (r.status != SearchStatus::kFound) continue;
    ++witnesses;
    TotalColoring c = lir_to_tlir(g, r.witness.edge_colors());
    bad += !verify_tlir(g, c).valid() || c.num_colors() != r.witness.num_colors();
  }
  return {bad == 0, fmt("100 locally irregular edge coloring witnesses: %d failures", bad)};
}

}  // namespace

int main() {
  report(1, "conjecture-sweep", conjecture_sweep);
  report(2, "cactus", cactus);
  report(3, "subcubic", subcubic);
  report(4, "split", split);
  report(5, "chromatic-bound", chromatic);
  report(6, "outerplanar", outerplanar);
  report(7, "planar", planar);
  report(8, "oracle-anchors", anchors);
  report(9, "bipartite-parity", bipartite_parity);
  report(10, "acyclic-conversion", acyclic_conversion);
  report(11, "lir-lift", lift);
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}

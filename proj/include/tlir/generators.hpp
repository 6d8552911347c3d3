#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tlir/graph.hpp"

namespace tlir {

/// Seeded generator with a fixed algorithm (mt19937_64) and bounded draws
/// computed here rather than by std distributions, so sequences are
/// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class GraphClass {
  kTree,
  kBipartite,
  kCactus,
  kSubcubic,
  kSplit,
  kRegular,
  kMaximalOuterplanar,
  kPlanarTriangulation,
  kOuterplanar,
  kConnected,
};

/// Parses names such as "cactus", "regular", "maximal_outerplanar".
GraphClass parse_graph_class(const std::string& name);
std::string to_string(GraphClass c);

enum class SplitProfile {
  kRandom,
  kSinglePendantVertex,  // only x1 sees Y, and d1 < floor(|X|/2)
  kTwoPendants,          // d1 = d2 = 1, d3 = 0
};

struct GenSpec {
  GraphClass graph_class = GraphClass::kTree;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t degree = 3;             // regular graphs
  double p = 0.3;                     // edge probability where it applies
  SplitProfile split_profile = SplitProfile::kRandom;
  std::size_t clique_size = 0;        // split graphs; 0 picks one at random
};

/// Equal GenSpec values give equal graphs. Throws InputError on infeasible parameters.
TotalGraph gen(const GenSpec& spec);

TotalGraph random_tree(std::size_t n, Rng& rng);
TotalGraph random_bipartite(std::size_t n, double p, Rng& rng);
TotalGraph random_cactus(std::size_t n, Rng& rng);
/// Spanning tree of maximum degree 3 plus random extra edges; `fill` is the
/// fraction of possible extra edges attempted.
TotalGraph random_subcubic(std::size_t n, double fill, Rng& rng);
TotalGraph random_split(std::size_t clique, std::size_t independent, SplitProfile profile, Rng& rng);
/// Connected d-regular graph by random pairing of degree slots, restarting
/// on dead ends or disconnected results.
TotalGraph random_regular(std::size_t n, std::size_t d, Rng& rng);
TotalGraph random_maximal_outerplanar(std::size_t n, Rng& rng);
/// Stacked triangulation followed by random edge flips.
TotalGraph random_planar_triangulation(std::size_t n, Rng& rng);
/// Maximal outerplanar graph with random edges removed, kept connected and
/// missing at least one edge whenever n >= 3.
TotalGraph random_outerplanar(std::size_t n, Rng& rng);
/// Random spanning tree plus each other pair with probability p.
TotalGraph random_connected(std::size_t n, double p, Rng& rng);

/// Relabels vertices by a random permutation of their ids.
TotalGraph shuffle_labels(const TotalGraph& g, Rng& rng);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 7), ids 0..n-1, in a fixed order.
std::vector<TotalGraph> enumerate_connected(std::size_t n);

}  // namespace tlir

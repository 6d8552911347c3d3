#pragma once

#include <cstddef>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

/// Maximal clique X = x_1..x_n listed by nonincreasing d_i = |N(x_i) ∩ Y|
/// (ties by id), and the independent rest Y.
struct SplitPartition {
  std::vector<VertexId> x;
  std::vector<VertexId> y;
  std::vector<std::size_t> d;
};

/// Throws PreconditionError if the graph is not split.
SplitPartition split_partition(const TotalGraph& g);

/// Keeps the edge colors and colors every vertex 1. Throws
/// PreconditionError unless every edge is colored, every class is locally
/// irregular by plain degrees, and every vertex is full.
TotalColoring lir_to_tlir(const TotalGraph& g, const EdgeColoring& ec);

enum class SplitRoute {
  kTree,             // n <= 2
  kComplete,         // Y empty
  kSinglePendant,    // d_1 < floor(n/2) and d_2 = 0
  kTwoPendants,      // d_1 = d_2 = 1, d_3 = 0, n in {6, 7, 8}
  kEdgeColoring,     // lir(G) <= 2: lifted locally irregular edge 2-coloring
};

/// Which branch split_tlir2 takes on a connected split graph.
SplitRoute split_route(const SplitPartition& p);

struct SplitStats {
  SplitRoute route = SplitRoute::kTree;
  bool seeded_completion = false;  // two-pendant case solved near the pendants only
};

/// Red-blue TLIR coloring of a split graph with all vertices full. At most
/// one component may have edges; isolated vertices are colored 1.
TotalColoring split_tlir2(const TotalGraph& g, SplitStats* stats = nullptr);

}  // namespace tlir

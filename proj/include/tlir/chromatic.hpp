#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

/// Classes A_1..A_k (stored 0-based) of a proper coloring in which every
/// vertex of A_i has a neighbor in each A_j with j < i.
struct ProperClasses {
  std::vector<std::vector<VertexId>> classes;
  std::map<VertexId, std::size_t> index;
};

/// Exact chromatic number by backtracking, with a witness coloring (colors 1..k).
std::size_t chromatic_number(const TotalGraph& g, VertexColoring* witness = nullptr);

/// Without `k`: an optimal proper coloring. With `k`: a largest-first greedy
/// coloring, or an exact search for k colors when greedy needs more; throws
/// PreconditionError when no proper k-coloring exists. Either way, vertices
/// are then moved to the smallest class without a neighbor until no move
/// applies, and empty classes are dropped.
ProperClasses maximal_proper_classes(const TotalGraph& g, std::optional<std::size_t> k = {});

/// True if the classes partition the graph, are independent, and satisfy
/// the neighbor condition.
bool is_maximal_proper(const TotalGraph& g, const ProperClasses& p);

struct ChromaticStats {
  std::size_t classes = 0;
  std::size_t stages = 0;             // bipartite stages colored
  std::size_t leftover_edges = 0;     // uncolored matching edges carried forward
  std::size_t recolored_y = 0;        // final-stage repairs at A_k vertices
};

/// TLIR coloring with at most 2k - 2 colors (k >= 2 classes), built stage
/// by stage on the bipartite graphs between A_j and the later classes.
/// Edgeless graphs get every vertex colored 1.
TotalColoring chromatic_tlir(const TotalGraph& g, ChromaticStats* stats = nullptr);
TotalColoring chromatic_tlir(const TotalGraph& g, const ProperClasses& p,
                             ChromaticStats* stats = nullptr);

}  // namespace tlir

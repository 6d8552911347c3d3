#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"
#include "tlir/oracle.hpp"

namespace tlir {

/// Vertex order in which every vertex has at most k earlier neighbors, all
/// pairwise adjacent.
struct CliqueOrder {
  std::vector<VertexId> order;
  std::map<VertexId, std::vector<VertexId>> back;  // earlier neighbors
  std::size_t k = 0;
};

/// Checks the order covers the graph once and satisfies the clique condition.
bool is_clique_order(const TotalGraph& g, const CliqueOrder& order);

/// Peels 2-vertices with adjacent neighbors (smallest id first) down to K2
/// and returns the reverse peel order. Also requires every edge to lie in at
/// most two triangles, which together characterize maximal outerplanar
/// graphs. Throws PreconditionError otherwise.
CliqueOrder maximal_outerplanar_order(const TotalGraph& g);
bool is_maximal_outerplanar(const TotalGraph& g);

/// Greedy coloring along the order with the smallest free color in 1..k+1.
VertexColoring greedy_clique_acyclic(const TotalGraph& g, const CliqueOrder& order);

/// Picks the root of a two-colored component (given sorted ascending).
using RootChooser = std::function<VertexId(const std::vector<VertexId>&)>;

/// For each color pair, orients each component of the induced forest away
/// from its root and colors every edge by its endpoint nearer the root.
/// Default root: smallest id. Throws PreconditionError unless vc is proper,
/// acyclic, and colors every vertex.
EdgeColoring star_from_acyclic(const TotalGraph& g, const VertexColoring& vc,
                               const RootChooser& root = nullptr);

/// vc on vertices plus star_from_acyclic on edges.
TotalColoring acyclic_to_tlir(const TotalGraph& g, const VertexColoring& vc,
                              const RootChooser& root = nullptr);

enum class OuterplanarRoute { kPeel, kSearch };

/// At most 3 colors: peel order and greedy coloring for maximal outerplanar
/// graphs, an acyclic 3-coloring search otherwise.
TotalColoring outerplanar_tlir3(const TotalGraph& g, OuterplanarRoute* route = nullptr,
                                const SearchBudget& budget = {});

enum class AcyclicHypothesis {
  kPlanar,     // acyclic 5-colorable; screened by |E| <= 3|V| - 6
  kMaxDegree,  // max degree 4 (k = 5) or 5 (k = 7)
};

/// Exact acyclic k-coloring search under the stated hypothesis, then
/// acyclic_to_tlir. `acyclic` receives the intermediate vertex coloring.
TotalColoring planar_tlir_k(const TotalGraph& g, int k = 5,
                            AcyclicHypothesis hypothesis = AcyclicHypothesis::kPlanar,
                            const SearchBudget& budget = {}, VertexColoring* acyclic = nullptr);

}  // namespace tlir

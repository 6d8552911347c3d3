#pragma once

#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"
#include "tlir/structure.hpp"

namespace tlir {

/// Names the two colors used by the red-blue constructions.
struct RedBlue {
  Color red = kRed;
  Color blue = kBlue;
};

/// Every edge red; x in X blue iff deg(x) is even, y in Y blue iff deg(y) is
/// odd. X vertices end with even total red-degree, Y vertices with odd.
/// Throws PreconditionError if `parts` is not a bipartition of `g`.
TotalColoring bipartite_tlir2(const TotalGraph& g, const Bipartition& parts, RedBlue colors = {});
/// Same, with the bipartition found by BFS.
TotalColoring bipartite_tlir2(const TotalGraph& g);

struct PartialBipartiteColoring {
  TotalColoring coloring;  // X colored, Y uncolored
  std::vector<Edge> uncolored_edges;
};

/// Partial coloring with every X vertex colored and of even total red-degree,
/// every Y vertex uncolored with odd red-degree, and the uncolored edges
/// forming a matching. Each even-degree y sends its edge to its smallest
/// neighbor into a blue star (or leaves it uncolored if that star is a
/// single edge); every other edge is red.
/// Throws PreconditionError on an invalid bipartition or an isolated y.
PartialBipartiteColoring partial_bipartite_tlir(const TotalGraph& g, const std::vector<VertexId>& x,
                                                const std::vector<VertexId>& y,
                                                RedBlue colors = {});

/// Extends a red-blue TLIR coloring `c` of `g` to g ∪ tree, where the tree
/// meets `g` only at `v` and deg_g(v) <= 2. All tree edges get one color.
/// Throws PreconditionError if deg_g(v) > 2, InputError if the tree is not a
/// tree or shares other vertices with `g`.
TotalColoring attach_pendant_tree(const TotalGraph& g, const TotalColoring& c, VertexId v,
                                  const TotalGraph& tree);

/// Red-blue coloring of a tree with all edges `edge_color` and `root`
/// colored `root_color`, obtained from the parity rule with the root placed
/// on the matching side.
TotalColoring tree_parity_coloring(const TotalGraph& tree, VertexId root, Color root_color,
                                   Color edge_color, RedBlue colors = {});

}  // namespace tlir

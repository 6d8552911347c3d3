#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

/// Successive maximum independent sets V_0, V_1, ... covering the graph.
struct Layering {
  std::vector<std::vector<VertexId>> layers;
  std::map<VertexId, std::size_t> index;
};

/// V_0 is `first` (which must be independent; the caller vouches that it is
/// maximum), each later layer a maximum independent set of what remains.
Layering layering_from(const TotalGraph& g, const std::vector<VertexId>& first);
/// V_0 is a maximum independent set with as few vertices of `avoid` as possible.
Layering build_layering(const TotalGraph& g, const std::set<VertexId>& avoid = {});

/// Red-blue TLIR coloring of a d-regular graph in which every vertex of
/// layer i has total red-degree d + 1 - i. Throws PreconditionError for
/// non-regular input or empty vertices, InvariantError if the search fails.
TotalColoring regular_layered_tlir2(const TotalGraph& g, const std::set<VertexId>& avoid = {});
TotalColoring regular_layered_tlir2(const TotalGraph& g, const Layering& layering);

/// s(G): sum over vertices of 3 - deg(v).
std::size_t subcubic_deficit(const TotalGraph& g);

enum class ReductionKind {
  kNone,
  kPendantTree,          // a tree hanging off a vertex of the 2-core
  kAdjacentTwoVertices,  // path x0 x1 x2 x3 with x0 != x3 and x0x3 absent
  kFourCycle,            // x0 x1 x2 x3 is a 4-cycle, x0 and x3 of degree 3
  kPendantFourCycle,     // 4-cycle with only x0 of degree 3
  kPendantTriangle,      // x0 = x3 of degree 3
  kGadgets,              // all 2-vertices independent: attach W to each
};

/// W = K4 on w1..w4 with the edge w1w2 subdivided by w0, attached by x w0.
struct Gadget {
  VertexId x = 0;
  std::array<VertexId, 5> w{};
};

struct Reduction {
  ReductionKind kind = ReductionKind::kNone;
  TotalGraph reduced;          // the input itself for kNone
  std::vector<VertexId> path;  // x0, x1, x2, x3 (x3 == x0 for the triangle)
  VertexId anchor = 0;         // pendant tree attachment
  TotalGraph tree;             // pendant tree including the anchor
  std::vector<Gadget> gadgets;
};

/// The first applicable reduction: pendant tree, then two adjacent
/// 2-vertices, then gadgets on the isolated 2-vertices. kNone for regular
/// graphs and trees.
Reduction find_reduction(const TotalGraph& g);
/// Rebuilds the graph the reduction was taken from.
TotalGraph undo_reduction(const Reduction& r);

struct SubcubicStats {
  std::map<ReductionKind, std::size_t> reductions;
  std::size_t regular_bases = 0;
  std::size_t tree_bases = 0;
  std::size_t gadgets_removed = 0;
  std::size_t gadget_recolorings = 0;  // removals that needed any change near x
  std::size_t gadget_fallbacks = 0;    // removals finished by the completion search
};

/// Red-blue TLIR coloring of a connected subcubic graph with all vertices full.
TotalColoring subcubic_tlir2(const TotalGraph& g, SubcubicStats* stats = nullptr);

}  // namespace tlir

#pragma once

#include <cstddef>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

enum class CycleCase { kLength3, kLength5, kEven, kOddAtLeast7 };

CycleCase cycle_case_for_length(std::size_t length);

/// A pendant cycle (x, x1, ..., xn) reinstated after its opening.
struct PendantCycleCase {
  std::vector<VertexId> cycle;  // starts at x
  CycleCase kind = CycleCase::kLength3;
  Color x1_color = kRed;  // colors of x1 and xn before the extension
  Color xn_color = kRed;
};

struct CactusStats {
  std::size_t tree_bases = 0;
  std::size_t tree_splits = 0;      // trees hanging off a non-attachment cycle vertex
  std::size_t cycle_openings = 0;   // good-vertex steps
  std::size_t cycles_extended = 0;
  std::size_t fallbacks = 0;        // extensions that needed the completion search
  std::size_t case_counts[4] = {0, 0, 0, 0};
};

/// Red-blue TLIR coloring of a connected cactus with all vertices full.
/// Throws PreconditionError otherwise.
TotalColoring cactus_tlir2(const TotalGraph& g, CactusStats* stats = nullptr);

/// Colors the reinstated elements of one pendant cycle of `g` following the
/// case rules, where `c` colors everything else and the edges xx1, xxn share
/// the color of the tree hanging at x. Falls back to the completion search
/// over the cycle and x when the rule leaves a conflict; `used_fallback`
/// reports that. Throws InvariantError if neither works.
TotalColoring extend_cycle_case(const TotalGraph& g, const TotalColoring& c,
                                const PendantCycleCase& pc, bool* used_fallback = nullptr);

}  // namespace tlir

#pragma once

#include <set>
#include <vector>

#include "tlir/graph.hpp"

namespace tlir {

bool is_independent(const TotalGraph& g, const std::vector<VertexId>& s);

/// An exact maximum independent set; among those of maximum size, one with
/// as few vertices of `avoid` as possible. Sorted ascending. Branches on a
/// vertex of largest degree, splits components, and solves paths and cycles
/// directly.
std::vector<VertexId> max_independent_set(const TotalGraph& g,
                                          const std::set<VertexId>& avoid = {});

}  // namespace tlir

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

struct SearchBudget {
  int max_colors = 2;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { kFound, kUncolorable, kNoneWithinBudget };

struct TlirSearchResult {
  SearchStatus status = SearchStatus::kNoneWithinBudget;
  int value = 0;  // meaningful when found
  TotalColoring witness;
  std::uint64_t nodes = 0;
  bool budget_hit = false;  // a node or time limit stopped the search
};

struct AcyclicSearchResult {
  SearchStatus status = SearchStatus::kNoneWithinBudget;
  int value = 0;
  VertexColoring witness;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

/// A vertex or an edge of a total graph.
struct Element {
  bool is_vertex = false;
  VertexId vertex = 0;
  Edge edge;

  static Element of(VertexId v) { return Element{true, v, Edge{}}; }
  static Element of(Edge e) { return Element{false, 0, e}; }
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Minimum number of colors of a TLIR coloring. Graphs without elements
/// report 0. When no coloring with at most `max_colors` colors exists the
/// status is kNoneWithinBudget.
TlirSearchResult exact_tlir(const TotalGraph& g, const SearchBudget& budget);

/// Minimum number of colors of an edge coloring whose classes are locally
/// irregular (vertex fullness ignored). kUncolorable once the search with
/// |E| colors is exhausted.
TlirSearchResult exact_lir(const TotalGraph& g, const SearchBudget& budget);

/// A locally irregular edge coloring with at most `k` colors, if one exists.
/// Throws BudgetExhausted when a limit stops the search.
std::optional<EdgeColoring> find_lir_coloring(const TotalGraph& g, int k,
                                              const SearchBudget& budget = {});

/// Acyclic chromatic number by backtracking.
AcyclicSearchResult exact_acyclic(const TotalGraph& g, const SearchBudget& budget);

/// An acyclic vertex coloring with at most `k` colors, if one exists.
/// Throws BudgetExhausted when a limit stops the search.
std::optional<VertexColoring> find_acyclic_coloring(const TotalGraph& g, int k,
                                                    const SearchBudget& budget = {});

/// Colors exactly `elements` (in the given order, colors from `palette`
/// tried ascending) so that every colored edge sharing an endpoint with a
/// listed element is valid. Listed elements that already carry a color are
/// recolored. Nullopt when no completion exists or the node limit is hit.
std::optional<TotalColoring> complete_partial_tlir(const TotalGraph& g, const TotalColoring& c,
                                                   const std::vector<Element>& elements,
                                                   const std::vector<Color>& palette,
                                                   std::optional<std::uint64_t> node_limit = {});

}  // namespace tlir

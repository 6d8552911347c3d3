#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlir/oracle.hpp"

namespace tlir {

struct SweepEntry {
  std::size_t n = 0;
  std::size_t index = 0;  // position within enumerate_connected(n)
  SearchStatus status = SearchStatus::kNoneWithinBudget;
  int value = 0;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // ordered by (n, index)
  std::vector<std::size_t> graphs_per_n;  // index n
  int max_tlir = 0;
  std::size_t unresolved = 0;  // graphs without an exact value within budget

  /// Every graph resolved with tlir <= 2.
  bool holds() const;
};

/// exact_tlir on every connected graph with 1..n_max vertices, one at a time.
SweepResult sweep_serial(std::size_t n_max, const SearchBudget& budget = {});

/// Same graphs spread over `jobs` OpenMP threads (0 keeps the runtime
/// default); the result equals sweep_serial's.
SweepResult sweep_parallel(std::size_t n_max, int jobs = 0, const SearchBudget& budget = {});

}  // namespace tlir

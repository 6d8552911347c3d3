#include "tlir/sweep.hpp"

#include <algorithm>
#include <omp.h>

#include "tlir/generators.hpp"

namespace tlir {

namespace {

struct Job {
  std::size_t n;
  std::size_t index;
  TotalGraph graph;
};

std::vector<Job> collect(std::size_t n_max, std::vector<std::size_t>& per_n) {
  std::vector<Job> jobs;
  per_n.assign(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto graphs = enumerate_connected(n);
    per_n[n] = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) jobs.push_back({n, i, std::move(graphs[i])});
  }
  return jobs;
}

SweepEntry run_one(const Job& job, const SearchBudget& budget) {
  SearchBudget b = budget;
  b.max_colors = std::max(b.max_colors, 3);
  TlirSearchResult r = exact_tlir(job.graph, b);
  return {job.n, job.index, r.status, r.value, r.nodes, r.budget_hit};
}

void summarize(SweepResult& result) {
  for (const SweepEntry& e : result.entries) {
    if (e.status == SearchStatus::kFound)
      result.max_tlir = std::max(result.max_tlir, e.value);
    else
      ++result.unresolved;
  }
}

}  // namespace

bool SweepResult::holds() const { return unresolved == 0 && max_tlir <= 2; }

SweepResult sweep_serial(std::size_t n_max, const SearchBudget& budget) {
  SweepResult result;
  std::vector<Job> jobs = collect(n_max, result.graphs_per_n);
  for (const Job& job : jobs) result.entries.push_back(run_one(job, budget));
  summarize(result);
  return result;
}

SweepResult sweep_parallel(std::size_t n_max, int jobs, const SearchBudget& budget) {
  SweepResult result;
  std::vector<Job> work = collect(n_max, result.graphs_per_n);
  result.entries.resize(work.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) result.entries[i] = run_one(work[i], budget);
  summarize(result);
  return result;
}

}  // namespace tlir

#include "tlir/independent.hpp"

#include <algorithm>

namespace tlir {

bool is_independent(const TotalGraph& g, const std::vector<VertexId>& s) {
  std::set<VertexId> in(s.begin(), s.end());
  for (VertexId v : s) {
    if (!g.contains(v)) return false;
    for (VertexId w : g.neighbors(v))
      if (in.count(w)) return false;
  }
  return true;
}

namespace {

struct Best {
  long score = 0;
  std::vector<int> set;
};

class MisSolver {
 public:
  MisSolver(const TotalGraph& g, const std::set<VertexId>& avoid) : n_(g.num_vertices()) {
    adj_.resize(n_);
    weight_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      VertexId v = g.vertices()[i];
      for (VertexId w : g.neighbors(v)) adj_[i].push_back(static_cast<int>(g.index_of(w)));
      // Size dominates; each avoided vertex costs one unit.
      weight_[i] = static_cast<long>(n_ + 1) - (avoid.count(v) ? 1 : 0);
    }
  }

  std::vector<int> run() {
    std::vector<char> alive(n_, 1);
    return solve(alive).set;
  }

 private:
  int degree(const std::vector<char>& alive, int v) const {
    int d = 0;
    for (int w : adj_[v]) d += alive[w];
    return d;
  }

  Best solve(const std::vector<char>& alive) {
    std::vector<char> seen(n_, 0);
    Best total;
    for (std::size_t s = 0; s < n_; ++s) {
      if (!alive[s] || seen[s]) continue;
      std::vector<int> comp{static_cast<int>(s)};
      seen[s] = 1;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (int w : adj_[comp[k]])
          if (alive[w] && !seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      Best part = solve_component(alive, comp);
      total.score += part.score;
      total.set.insert(total.set.end(), part.set.begin(), part.set.end());
    }
    return total;
  }

  Best solve_component(const std::vector<char>& alive, const std::vector<int>& comp) {
    int pivot = -1, pivot_degree = -1;
    for (int v : comp) {
      int d = degree(alive, v);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree <= 2) return solve_path_or_cycle(alive, comp);

    std::vector<char> without(n_, 0);
    for (int v : comp) without[v] = 1;
    without[pivot] = 0;
    std::vector<char> with = without;
    for (int w : adj_[pivot]) with[w] = 0;

    Best take = solve(with);
    take.score += weight_[pivot];
    take.set.push_back(pivot);
    Best skip = solve(without);
    return take.score >= skip.score ? take : skip;
  }

  // Component of maximum degree at most 2: walk it in order, then run the
  // usual take/skip recurrence (twice for a cycle).
  Best solve_path_or_cycle(const std::vector<char>& alive, const std::vector<int>& comp) {
    int start = comp.front();
    bool cycle = true;
    for (int v : comp)
      if (degree(alive, v) < 2) {
        cycle = false;
        start = v;
        break;
      }
    std::vector<int> order{start};
    std::vector<char> used(n_, 0);
    used[start] = 1;
    while (true) {
      int next = -1;
      for (int w : adj_[order.back()])
        if (alive[w] && !used[w]) {
          next = w;
          break;
        }
      if (next < 0) break;
      used[next] = 1;
      order.push_back(next);
    }
    if (!cycle || order.size() < 3) return line(order);
    std::vector<int> rest(order.begin() + 1, order.end());
    Best skip_first = line(rest);
    std::vector<int> inner(order.begin() + 2, order.end() - 1);
    Best take_first = line(inner);
    take_first.score += weight_[order.front()];
    take_first.set.push_back(order.front());
    return take_first.score >= skip_first.score ? take_first : skip_first;
  }

  Best line(const std::vector<int>& order) const {
    const std::size_t m = order.size();
    // best[i]: optimum over the first i vertices.
    std::vector<long> best(m + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
      long take = weight_[order[i - 1]] + (i >= 2 ? best[i - 2] : 0);
      best[i] = std::max(best[i - 1], take);
    }
    Best out;
    out.score = best[m];
    for (std::size_t i = m; i >= 1;) {
      if (best[i] == best[i - 1]) {
        --i;
        continue;
      }
      out.set.push_back(order[i - 1]);
      i = i >= 2 ? i - 2 : 0;
    }
    return out;
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<long> weight_;
};

}  // namespace

std::vector<VertexId> max_independent_set(const TotalGraph& g, const std::set<VertexId>& avoid) {
  MisSolver solver(g, avoid);
  std::vector<VertexId> out;
  for (int i : solver.run()) out.push_back(g.vertices()[static_cast<std::size_t>(i)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tlir

#include "tlir/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

#include "tlir/errors.hpp"

namespace tlir {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

namespace {

const std::map<std::string, GraphClass>& class_names() {
  static const std::map<std::string, GraphClass> names{
      {"tree", GraphClass::kTree},
      {"bipartite", GraphClass::kBipartite},
      {"cactus", GraphClass::kCactus},
      {"subcubic", GraphClass::kSubcubic},
      {"split", GraphClass::kSplit},
      {"regular", GraphClass::kRegular},
      {"maximal_outerplanar", GraphClass::kMaximalOuterplanar},
      {"planar_triangulation", GraphClass::kPlanarTriangulation},
      {"outerplanar", GraphClass::kOuterplanar},
      {"connected", GraphClass::kConnected},
  };
  return names;
}

// Mutable edge set over ids 0..n-1 used while building.
class Builder {
 public:
  explicit Builder(std::size_t n) : adj_(n) {}

  bool has(std::size_t a, std::size_t b) const { return adj_[a].count(b) > 0; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t size() const { return adj_.size(); }
  std::size_t add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }
  bool add(std::size_t a, std::size_t b) {
    if (a == b || has(a, b)) return false;
    adj_[a].insert(b);
    adj_[b].insert(a);
    return true;
  }
  void remove(std::size_t a, std::size_t b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
  }
  TotalGraph build() const {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < adj_.size(); ++a)
      for (std::size_t b : adj_[a])
        if (a < b) edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    return make_graph(adj_.size(), edges);
  }

 private:
  std::vector<std::set<std::size_t>> adj_;
};

void attach_random_tree(Builder& b, std::size_t n, Rng& rng) {
  for (std::size_t v = 1; v < n; ++v) b.add(v, rng.below(v));
}

}  // namespace

GraphClass parse_graph_class(const std::string& name) {
  auto it = class_names().find(name);
  if (it == class_names().end()) throw InputError("unknown graph class '" + name + "'");
  return it->second;
}

std::string to_string(GraphClass c) {
  for (const auto& [name, value] : class_names())
    if (value == c) return name;
  return "unknown";
}

TotalGraph shuffle_labels(const TotalGraph& g, Rng& rng) {
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  std::vector<VertexId> image = ids;
  rng.shuffle(image);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < ids.size(); ++i) to[ids[i]] = image[i];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(to[e.u], to[e.v]);
  std::vector<VertexId> empty;
  for (VertexId v : g.empty_vertices()) empty.push_back(to[v]);
  return TotalGraph(ids, edges, empty);
}

TotalGraph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("a tree needs at least one vertex");
  Builder b(n);
  attach_random_tree(b, n, rng);
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_bipartite(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw InputError("a graph needs at least one vertex");
  std::size_t a = n == 1 ? 1 : rng.between(1, n - 1);
  Builder b(n);
  for (std::size_t x = 0; x < a; ++x)
    for (std::size_t y = a; y < n; ++y)
      if (rng.chance(p)) b.add(x, y);
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_cactus(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("a cactus needs at least one vertex");
  std::size_t skeleton = std::max<std::size_t>(1, rng.between((n + 3) / 4, (n + 1) / 2));
  Builder b(skeleton);
  attach_random_tree(b, skeleton, rng);
  std::vector<std::pair<std::size_t, std::size_t>> open;
  for (std::size_t v = 1; v < skeleton; ++v)
    for (std::size_t w = 0; w < v; ++w)
      if (b.has(v, w)) open.emplace_back(w, v);

  std::size_t extra = n - skeleton;
  while (extra > 0) {
    if (open.empty() || rng.chance(0.15)) {
      std::size_t v = b.add_vertex();
      std::size_t w = rng.below(v);
      b.add(v, w);
      open.emplace_back(w, v);
      --extra;
      continue;
    }
    std::size_t pick = rng.below(open.size());
    auto [u, v] = open[pick];
    open.erase(open.begin() + static_cast<long>(pick));
    // Inflate uv into a cycle of length inner + 2.
    std::size_t inner = 1 + rng.below(std::min<std::size_t>(extra, 6));
    std::size_t prev = u;
    for (std::size_t i = 0; i < inner; ++i) {
      std::size_t w = b.add_vertex();
      b.add(prev, w);
      prev = w;
    }
    b.add(prev, v);
    extra -= inner;
  }
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_subcubic(std::size_t n, double fill, Rng& rng) {
  if (n == 0) throw InputError("a graph needs at least one vertex");
  Builder b(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> open;
    for (std::size_t w = 0; w < v; ++w)
      if (b.degree(w) < 3) open.push_back(w);
    b.add(v, open[rng.below(open.size())]);
  }
  std::size_t attempts = static_cast<std::size_t>(fill * static_cast<double>(n) * 1.5);
  for (std::size_t i = 0; i < attempts; ++i) {
    std::size_t a = rng.below(n), c = rng.below(n);
    if (a != c && b.degree(a) < 3 && b.degree(c) < 3) b.add(a, c);
  }
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_split(std::size_t clique, std::size_t independent, SplitProfile profile,
                        Rng& rng) {
  if (clique == 0) throw InputError("a split graph needs a nonempty clique");
  Builder b(clique + independent);
  for (std::size_t i = 0; i < clique; ++i)
    for (std::size_t j = i + 1; j < clique; ++j) b.add(i, j);
  switch (profile) {
    case SplitProfile::kRandom:
      for (std::size_t y = clique; y < clique + independent; ++y) {
        // At least one and at most clique-1 neighbors keeps the clique maximal.
        std::size_t hi = clique > 1 ? clique - 1 : 1;
        std::size_t want = rng.between(1, hi);
        std::vector<std::size_t> xs(clique);
        for (std::size_t i = 0; i < clique; ++i) xs[i] = i;
        rng.shuffle(xs);
        for (std::size_t i = 0; i < want; ++i) b.add(y, xs[i]);
      }
      break;
    case SplitProfile::kSinglePendantVertex: {
      if (independent == 0 || independent >= clique / 2)
        throw InputError("single-pendant split profile needs 0 < |Y| < floor(|X|/2)");
      std::size_t hub = rng.below(clique);
      for (std::size_t y = clique; y < clique + independent; ++y) b.add(y, hub);
      break;
    }
    case SplitProfile::kTwoPendants: {
      if (clique < 3 || independent == 0 || independent > 2)
        throw InputError("two-pendant split profile needs |X| >= 3 and |Y| in {1, 2}");
      std::size_t a = rng.below(clique);
      std::size_t c = (a + 1 + rng.below(clique - 1)) % clique;
      if (independent == 1) {
        b.add(clique, a);
        b.add(clique, c);
      } else {
        b.add(clique, a);
        b.add(clique + 1, c);
      }
      break;
    }
  }
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (n == 0 || d >= n || (n * d) % 2 != 0)
    throw InputError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                     " vertices");
  for (int attempt = 0; attempt < 2000; ++attempt) {
    // Pair random free points, skipping pairs that would form a loop or a
    // parallel edge; start over when only such pairs remain.
    std::vector<std::size_t> points;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) points.push_back(v);
    Builder b(n);
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 50 && !placed; ++tries) {
        std::size_t i = rng.below(points.size()), j = rng.below(points.size());
        if (i == j || !b.add(points[i], points[j])) continue;
        if (i < j) std::swap(i, j);
        points.erase(points.begin() + static_cast<long>(i));
        points.erase(points.begin() + static_cast<long>(j));
        placed = true;
      }
      stuck = !placed;
    }
    if (stuck) continue;
    TotalGraph g = b.build();
    if (d > 0 && !is_connected(g)) continue;
    return shuffle_labels(g, rng);
  }
  throw InputError("pairing model kept producing loops, parallel edges or disconnected graphs");
}

TotalGraph random_maximal_outerplanar(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("a graph needs at least one vertex");
  Builder b(n);
  if (n >= 2) {
    for (std::size_t v = 0; v < n; ++v) b.add(v, (v + 1) % n);
  }
  std::vector<std::size_t> polygon(n);
  for (std::size_t v = 0; v < n; ++v) polygon[v] = v;
  while (polygon.size() > 3) {
    std::size_t i = rng.below(polygon.size());
    std::size_t prev = polygon[(i + polygon.size() - 1) % polygon.size()];
    std::size_t next = polygon[(i + 1) % polygon.size()];
    b.add(prev, next);
    polygon.erase(polygon.begin() + static_cast<long>(i));
  }
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_planar_triangulation(std::size_t n, Rng& rng) {
  if (n < 3) throw InputError("a planar triangulation needs at least 3 vertices");
  Builder b(3);
  b.add(0, 1);
  b.add(1, 2);
  b.add(0, 2);
  // Both sides of the initial triangle are faces.
  std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (std::size_t v = 3; v < n; ++v) {
    std::size_t f = rng.below(faces.size());
    auto [a, c, d] = faces[f];
    b.add_vertex();
    b.add(v, a);
    b.add(v, c);
    b.add(v, d);
    faces[f] = {a, c, v};
    faces.push_back({c, d, v});
    faces.push_back({a, d, v});
  }
  auto shares = [](const std::array<std::size_t, 3>& f, std::size_t x) {
    return f[0] == x || f[1] == x || f[2] == x;
  };
  std::size_t flips = n >= 5 ? 3 * n : 0;
  for (std::size_t step = 0; step < flips; ++step) {
    std::size_t f = rng.below(faces.size());
    std::size_t k = rng.below(3);
    std::size_t a = faces[f][k], c = faces[f][(k + 1) % 3];
    std::size_t apex1 = faces[f][(k + 2) % 3];
    std::size_t g2 = faces.size();
    for (std::size_t h = 0; h < faces.size(); ++h)
      if (h != f && shares(faces[h], a) && shares(faces[h], c)) g2 = h;
    if (g2 == faces.size()) continue;
    std::size_t apex2 = faces[g2][0] + faces[g2][1] + faces[g2][2] - a - c;
    if (apex1 == apex2 || b.has(apex1, apex2) || b.degree(a) <= 3 || b.degree(c) <= 3) continue;
    b.remove(a, c);
    b.add(apex1, apex2);
    faces[f] = {a, apex1, apex2};
    faces[g2] = {c, apex1, apex2};
  }
  return shuffle_labels(b.build(), rng);
}

TotalGraph random_outerplanar(std::size_t n, Rng& rng) {
  TotalGraph g = random_maximal_outerplanar(n, rng);
  if (n < 3) return g;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  rng.shuffle(edges);
  std::size_t target = 1 + rng.below(std::max<std::size_t>(1, n - 2));
  std::vector<Edge> removed;
  for (const Edge& e : edges) {
    if (removed.size() >= target) break;
    TotalGraph trial = with_edges(g, {}, {e});
    if (!is_connected(trial)) continue;
    g = trial;
    removed.push_back(e);
  }
  return g;
}

TotalGraph random_connected(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw InputError("a graph needs at least one vertex");
  Builder b(n);
  attach_random_tree(b, n, rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!b.has(i, j) && rng.chance(p)) b.add(i, j);
  return shuffle_labels(b.build(), rng);
}

TotalGraph gen(const GenSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.graph_class) {
    case GraphClass::kTree:
      return random_tree(spec.n, rng);
    case GraphClass::kBipartite:
      return random_bipartite(spec.n, spec.p, rng);
    case GraphClass::kCactus:
      return random_cactus(spec.n, rng);
    case GraphClass::kSubcubic:
      return random_subcubic(spec.n, spec.p, rng);
    case GraphClass::kSplit: {
      if (spec.n == 0) throw InputError("a split graph needs at least one vertex");
      std::size_t clique = spec.clique_size;
      if (clique == 0) clique = rng.between((spec.n + 1) / 2, spec.n);
      if (clique > spec.n) throw InputError("clique larger than the graph");
      return random_split(clique, spec.n - clique, spec.split_profile, rng);
    }
    case GraphClass::kRegular:
      return random_regular(spec.n, spec.degree, rng);
    case GraphClass::kMaximalOuterplanar:
      return random_maximal_outerplanar(spec.n, rng);
    case GraphClass::kPlanarTriangulation:
      return random_planar_triangulation(spec.n, rng);
    case GraphClass::kOuterplanar:
      return random_outerplanar(spec.n, rng);
    case GraphClass::kConnected:
      return random_connected(spec.n, spec.p, rng);
  }
  throw InputError("unknown graph class");
}

// --- exhaustive enumeration ---------------------------------------------------

namespace {

using Adjacency = std::vector<std::uint32_t>;  // bit masks, n <= 7

// Largest pair-bit code over relabelings that list vertices by nonincreasing
// degree (only vertices of equal degree are permuted among themselves).
std::uint64_t canonical_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto deg = [&](std::size_t v) { return __builtin_popcount(adj[v]); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return deg(a) != deg(b) ? deg(a) > deg(b) : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : groups) std::sort(order.begin() + lo, order.begin() + hi);

  std::uint64_t best = 0;
  while (true) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
    best = std::max(best, code);
    // Advance the product of per-group permutations.
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [lo, hi] = groups[gi];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (gi == groups.size()) break;
  }
  return best;
}

bool connected_mask(const Adjacency& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (frontier >> v & 1u) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << adj.size()) - 1;
}

}  // namespace

std::vector<TotalGraph> enumerate_connected(std::size_t n) {
  if (n == 0 || n > 7) throw InputError("enumerate_connected supports 1 <= n <= 7");
  std::map<std::uint64_t, Adjacency> level{{0, Adjacency{0}}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::uint64_t, Adjacency> next;
    for (const auto& [code, adj] : level) {
      for (std::uint32_t mask = 1; mask < (1u << (size - 1)); ++mask) {
        Adjacency grown = adj;
        grown.push_back(mask);
        for (std::size_t v = 0; v + 1 < size; ++v)
          if (mask >> v & 1u) grown[v] |= 1u << (size - 1);
        if (!connected_mask(grown)) continue;
        next.emplace(canonical_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<TotalGraph> out;
  for (const auto& [code, adj] : level) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (adj[a] >> b & 1u) edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    out.push_back(make_graph(n, edges));
  }
  // Fewer edges first, then by canonical code (map order).
  std::stable_sort(out.begin(), out.end(), [](const TotalGraph& a, const TotalGraph& b) {
    return a.num_edges() < b.num_edges();
  });
  return out;
}

}  // namespace tlir

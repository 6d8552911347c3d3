#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace tlir {

using VertexId = std::int64_t;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Fullness : std::uint8_t { kEmpty, kFull };

/// A total graph: simple undirected graph whose vertices are either full or
/// empty. Full vertices carry a vertex color in a total coloring and count +1
/// in their total degree; empty vertices do neither.
///
/// Vertex ids are arbitrary nonnegative integers, iterated in ascending
/// order. Subgraphs keep the ids of their parent, so colorings transfer
/// between a graph and its pieces without relabeling. Immutable once built.
class TotalGraph {
 public:
  TotalGraph() = default;

  /// Throws InputError on negative or duplicate ids, self-loops, parallel
  /// edges, undeclared endpoints, or an `empty` id that is not a vertex.
  TotalGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             const std::vector<VertexId>& empty_vertices = {});

  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const VertexId> vertices() const { return ids_; }
  std::span<const Edge> edges() const { return edges_; }

  bool contains(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;

  /// Position of `v` in `vertices()`. Throws InputError for unknown ids.
  std::size_t index_of(VertexId v) const;

  bool is_full(VertexId v) const { return full_[index_of(v)]; }
  bool all_full() const;

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[index_of(v)]; }
  std::size_t degree(VertexId v) const { return adj_[index_of(v)].size(); }
  std::size_t max_degree() const;
  VertexId max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  std::vector<VertexId> empty_vertices() const;

  friend bool operator==(const TotalGraph& a, const TotalGraph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_ && a.full_ == b.full_;
  }

 private:
  std::vector<VertexId> ids_;
  std::vector<bool> full_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

/// Number of edges at `v` plus one if `v` is full.
std::size_t total_degree(const TotalGraph& g, VertexId v);

// --- construction helpers -------------------------------------------------

/// All-full graph on ids 0..n-1.
TotalGraph make_graph(std::size_t n, const std::vector<Edge>& edges);

TotalGraph path_graph(std::size_t n);
TotalGraph cycle_graph(std::size_t n);
TotalGraph complete_graph(std::size_t n);
TotalGraph star_graph(std::size_t leaves);  // center 0
TotalGraph butterfly_graph();               // triangles {0,1,2} and {0,3,4}
/// Two butterflies whose centers 0 and 5 are joined by an edge; the cactus
/// whose locally irregular edge colorings need four colors.
TotalGraph bowtie_graph();

TotalGraph induced_subgraph(const TotalGraph& g, const std::set<VertexId>& keep);
TotalGraph remove_vertices(const TotalGraph& g, const std::set<VertexId>& drop);
/// Graph on the endpoints of `edges` plus `extra_vertices`; fullness copied.
TotalGraph edge_subgraph(const TotalGraph& g, const std::vector<Edge>& edges,
                         const std::set<VertexId>& extra_vertices = {});
TotalGraph with_edges(const TotalGraph& g, const std::vector<Edge>& add,
                      const std::vector<Edge>& remove = {});
TotalGraph graph_union(const TotalGraph& a, const TotalGraph& b);
/// Same vertices and edges with every vertex marked empty.
TotalGraph all_empty(const TotalGraph& g);

/// Connected components as ascending vertex sets, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const TotalGraph& g);
bool is_connected(const TotalGraph& g);

}  // namespace tlir

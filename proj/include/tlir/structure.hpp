#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tlir/graph.hpp"

namespace tlir {

enum class BlockKind { kCycle, kBridge, kOther };

struct Block {
  BlockKind kind = BlockKind::kOther;
  std::vector<VertexId> vertices;  // ascending
  std::vector<Edge> edges;         // ascending
};

/// Block-cut tree (a forest when the graph is disconnected).
///
/// Nodes `0 .. blocks.size()-1` are blocks; node `blocks.size() + i` is
/// `cut_vertices[i]`. `in_pruned` marks the nodes that survive repeatedly
/// deleting leaves that are bridge blocks or cut vertices.
struct BlockCutTree {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // ascending
  std::vector<std::vector<std::size_t>> incidence;
  std::vector<bool> in_pruned;
  bool connected = true;

  std::size_t num_nodes() const { return incidence.size(); }
  bool is_block_node(std::size_t node) const { return node < blocks.size(); }
  VertexId cut_vertex_of(std::size_t node) const { return cut_vertices[node - blocks.size()]; }
  std::size_t node_of_cut_vertex(VertexId v) const;
  /// Neighbors of `node` restricted to the pruned tree.
  std::vector<std::size_t> pruned_neighbors(std::size_t node) const;
};

BlockCutTree block_cut_tree(const TotalGraph& g);

/// Vertex sequence of a cycle block starting at `start`, stepping first to
/// the smaller of its two cycle neighbors.
std::vector<VertexId> cycle_sequence(const Block& cycle, VertexId start);

/// A cycle in a cactus whose removal (of its edges) leaves at most one
/// component containing cycles; the sequence starts at the vertex that joins
/// it to the rest of the graph. Empty optional iff the cactus is a tree.
/// Throws PreconditionError on non-cacti.
std::optional<std::vector<VertexId>> find_pendant_cycle(const TotalGraph& g);

struct PendantTree {
  VertexId root = 0;              // shared with the rest of the graph
  std::vector<VertexId> vertices;  // includes root, ascending
  std::vector<Edge> edges;
};

struct GoodVertex {
  VertexId x = 0;
  std::vector<std::vector<VertexId>> pendant_cycles;  // each starts at x
  std::vector<PendantTree> pendant_trees;             // each rooted at x
  std::vector<Edge> leftover;                         // at most two edges at x
};

/// A vertex all but at most two of whose edges lie on pendant cycles or
/// pendant trees attached at it. Chosen as the second node of a longest path
/// in the pruned block-cut tree; trees use a longest path of the tree itself.
/// Throws PreconditionError on non-cacti or disconnected input.
GoodVertex find_good_vertex(const TotalGraph& g);

struct Bipartition {
  std::vector<VertexId> x;
  std::vector<VertexId> y;
};

/// 2-coloring by BFS; the smallest vertex of every component lands in `x`.
std::optional<Bipartition> find_bipartition(const TotalGraph& g);
bool is_valid_bipartition(const TotalGraph& g, const Bipartition& parts);

struct SplitCertificate {
  std::vector<VertexId> clique;       // maximal: no independent vertex sees all of it
  std::vector<VertexId> independent;
};

/// Degree-sequence split recognition followed by growing the clique to be
/// maximal. Empty optional if the graph is not split.
std::optional<SplitCertificate> recognize_split(const TotalGraph& g);

bool is_cactus(const TotalGraph& g);

struct ClassReport {
  bool connected = false;
  bool is_tree = false;
  bool is_bipartite = false;
  std::optional<Bipartition> parts;
  bool is_cactus = false;
  bool is_subcubic = false;
  bool is_regular = false;
  std::size_t regular_degree = 0;
  bool is_split = false;
  std::optional<SplitCertificate> split;
  std::size_t max_degree = 0;
};

ClassReport classify(const TotalGraph& g);

}  // namespace tlir

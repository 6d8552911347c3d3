#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tlir/graph.hpp"

namespace tlir {

using Color = int;

inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;
inline Color swap_red_blue(Color c) { return c == kRed ? kBlue : kRed; }

/// Partial assignment of colors (>= 1) to vertices and edges. An element
/// that has no entry is uncolored.
class TotalColoring {
 public:
  void set_vertex(VertexId v, Color c);
  void set_edge(Edge e, Color c);
  void clear_vertex(VertexId v) { vertex_.erase(v); }
  void clear_edge(Edge e) { edge_.erase(e); }

  std::optional<Color> vertex(VertexId v) const;
  std::optional<Color> edge(Edge e) const;

  const std::map<VertexId, Color>& vertex_colors() const { return vertex_; }
  const std::map<Edge, Color>& edge_colors() const { return edge_; }

  /// Overwrites with every entry of `other`.
  void merge(const TotalColoring& other);
  /// Applies `mapping` to every color (missing keys keep their color).
  TotalColoring recolored(const std::map<Color, Color>& mapping) const;

  std::set<Color> colors_used() const;
  std::size_t num_colors() const { return colors_used().size(); }

  friend bool operator==(const TotalColoring&, const TotalColoring&) = default;

 private:
  std::map<VertexId, Color> vertex_;
  std::map<Edge, Color> edge_;
};

/// Incident edges colored `k` plus one if `v` itself is colored `k`.
std::size_t total_color_degree(const TotalGraph& g, const TotalColoring& c, VertexId v, Color k);

struct Violation {
  Edge edge;
  Color color = 0;
  std::size_t degree_u = 0;
  std::size_t degree_v = 0;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct TlirReport {
  std::vector<Violation> violations;       // sorted by edge, then class
  std::vector<Edge> uncolored_edges;       // only filled with require_total
  std::vector<VertexId> uncolored_vertices;
  std::vector<VertexId> colored_empty;     // empty vertices carrying a color
  std::vector<std::string> foreign;        // colored elements absent from the graph

  bool valid() const {
    return violations.empty() && uncolored_edges.empty() && uncolored_vertices.empty() &&
           colored_empty.empty() && foreign.empty();
  }
};

/// Every colored edge must join endpoints of different total degree inside
/// its color class. With `require_total`, every edge and full vertex must
/// also be colored. Uncolored edges impose nothing.
TlirReport verify_tlir(const TotalGraph& g, const TotalColoring& c, bool require_total = true);

/// Convenience: violations restricted to colored edges that touch one of `vertices`.
std::vector<Violation> violations_near(const TotalGraph& g, const TotalColoring& c,
                                       const std::set<VertexId>& vertices);

using VertexColoring = std::map<VertexId, Color>;
using EdgeColoring = std::map<Edge, Color>;

/// First edge whose two colored endpoints share a color.
std::optional<Edge> verify_proper(const TotalGraph& g, const VertexColoring& vc);

/// A cycle alternating between two color classes, or nullopt if the coloring
/// is acyclic. Throws PreconditionError when `vc` is partial or improper.
std::optional<std::vector<VertexId>> verify_acyclic(const TotalGraph& g, const VertexColoring& vc);

struct Star {
  Color color = 0;
  VertexId center = 0;
  std::vector<Edge> edges;
};

struct StarReport {
  std::vector<Star> stars;
  std::optional<std::string> violation;
  bool valid() const { return !violation.has_value(); }
};

/// Each edge color class must be a star forest. When `vc` is given, every
/// star with two or more edges of class `a` must have its center colored `a`.
StarReport verify_star(const TotalGraph& g, const EdgeColoring& ec,
                       const VertexColoring* vc = nullptr);

}  // namespace tlir

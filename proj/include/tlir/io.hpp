#pragma once

#include <string>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"

namespace tlir {

// Line-oriented text formats:
//   v <id> full|empty      vertex
//   e <id> <id>            edge between declared vertices
//   vc <id> <color>        vertex color
//   ec <id> <id> <color>   edge color
// '#' starts a comment; blank lines are ignored. Ids are nonnegative, colors
// positive. Parse errors throw InputError naming the line.

TotalGraph parse_graph(const std::string& text);
/// Canonical form: v-lines by id, then e-lines by (u, v) with u < v.
std::string serialize_graph(const TotalGraph& g);

TotalColoring parse_coloring(const std::string& text);
/// Canonical form: vc-lines by id, then ec-lines by edge.
std::string serialize_coloring(const TotalColoring& c);

/// Graphviz export. Colors 1, 2, 3 render red, blue, green, higher colors
/// cycle through a fixed palette; vertices as fill, edges as stroke. Empty
/// vertices are drawn dashed.
std::string to_dot(const TotalGraph& g, const TotalColoring* c = nullptr);
std::string dot_color_name(Color c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tlir

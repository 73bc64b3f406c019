#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Edge-list text format:
//   # comment
//   p <n> <m>        optional, must precede all edges; fixes n
//   <u> <v>          one edge per line, non-negative integers
// Without a p line, n = largest index + 1.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& header_comments = {});

// Coloring text format: `<u> <v> <c>` per line, c >= 1, covering every edge of
// the graph exactly once. Lines may list endpoints in either order.
EdgeColoring read_coloring(std::istream& in, const Graph& g);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& coloring);

}  // namespace rainbow

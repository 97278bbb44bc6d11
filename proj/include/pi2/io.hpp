#pragma once

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
//
//   graph     V <n>, then E <a> <b> lines (E a a is a loop)
//   map       M <n_src> <n_tgt>, then F <src> <tgt> for every source vertex
//   bundle    a graph block (source), a graph block (target), then a map
//   subgraph  a graph block on the parent's ids, plus W <v> lines for members
//             without edges
//   loops     one L <v0> <v1> ... line per path
//
// Writers emit canonical text: edges as a <= b in lexicographic order, map
// lines in source order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pi2/graph.hpp"

namespace pi2::io {

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

struct RawMap {
  int source_count = 0;
  int target_count = 0;
  std::vector<Vertex> assignment;
  std::optional<Graph> source;  // present in bundles
  std::optional<Graph> target;
};
RawMap parse_raw_map(std::string_view text);

// Graphs supplied here override (and must agree in size with) bundle graphs.
GraphMap parse_map(std::string_view text, const std::optional<Graph>& source = {},
                   const std::optional<Graph>& target = {});
std::string write_map(const GraphMap& m);
std::string write_bundle(const GraphMap& m);

Subgraph parse_subgraph(std::string_view text, const Graph& parent);
std::string write_subgraph(const Subgraph& s);

std::vector<std::vector<Vertex>> parse_loops(std::string_view text);
std::string write_loops(const std::vector<std::vector<Vertex>>& loops);

std::string read_file(const std::string& path);

}  // namespace pi2::io

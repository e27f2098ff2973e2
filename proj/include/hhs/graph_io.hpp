#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

enum class GraphFormat { edgelist, json };

// Edge list: one "u v" pair per line, '#' starts a comment, a line with a
// single token declares an isolated vertex.  When every label is an integer
// the vertices are numbered in numeric order, otherwise in order of first
// appearance.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist_string(const std::string& text);

// {"vertices":[...], "edges":[[u,v],...]}; vertices keep the listed order.
Graph parse_json_graph(const std::string& text);

Graph read_graph(const std::string& path, GraphFormat format);
GraphFormat format_from_name(const std::string& name);

std::string to_json_graph(const Graph& g);
std::string to_edgelist(const Graph& g);

// DOT rendering.  Node and edge attributes are optional; when given they are
// indexed by vertex id and edge id and emitted verbatim inside [...].
struct DotStyle {
  std::vector<std::string> node_attrs;
  std::vector<std::string> edge_attrs;
};
std::string to_dot(const Graph& g, const std::string& name = "G", const DotStyle* style = nullptr);

}  // namespace hhs

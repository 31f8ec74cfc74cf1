#pragma once

#include <string>

#include "mpg/triangulation.hpp"

namespace mpg {

// graph6 text codec (bit-exact per the published format; n <= 62 uses the
// single-byte header, larger orders the 4-byte form).
std::string encode_graph6(const Triangulation& t);
std::string encode_graph6(const SGraph& g);
Triangulation decode_graph6(const std::string& text); // re-embeds via from_edge_list
SGraph decode_graph6_sgraph(const std::string& text);

// DOT export with straight-line layout hints and face annotations.
std::string to_dot(const Triangulation& t);

// JSON adjacency {"n": ..., "edges": [[u,v], ...]} used in reports.
std::string to_json_adjacency(const Triangulation& t);

} // namespace mpg

#pragma once

#include <string>

#include "zq/graph.hpp"

namespace zq {

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_format(const std::string& name);

// Dense graph6: size header then the upper triangle packed 6 bits per
// printable byte (offset 63). Strict: rejects out-of-range bytes, wrong
// length, and nonzero padding.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Whitespace-separated "u v" pairs, 0-based; an optional single leading
// integer fixes the vertex count (needed for isolated vertices).
Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

Graph parse_graph(const std::string& text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace zq

#pragma once

#include "lpaflow/graph.hpp"

#include <string>
#include <string_view>

namespace lpaflow {

// Graph text format. Either
//
//   matrix n            followed by n rows of n non-negative integers, or
//   edges n             followed by lines "i j k": k parallel edges i -> j.
//
// Vertices are 0-indexed, a '#' at the start of a word begins a comment,
// blank lines are ignored.
// Parsing yields the edge-normalized graph: edges in row-major order of the
// incidence matrix, default labels.

/// Throws ParseError carrying a 1-based line and column.
MultiGraph parse_graph(std::string_view text);

MultiGraph read_graph_file(const std::string& path);

std::string format_matrix(const MultiGraph& g);

/// One line per nonzero incidence entry, row-major.
std::string format_edges(const MultiGraph& g);

/// Rebuild g with edges in row-major incidence order; labels are kept.
MultiGraph normalize_edges(const MultiGraph& g);

}  // namespace lpaflow

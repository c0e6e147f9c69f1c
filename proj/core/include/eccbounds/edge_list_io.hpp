#pragma once

#include <iosfwd>
#include <string>

#include "eccbounds/graph.hpp"

namespace eccb {

/// Reads the text edge-list format: a line "n m", then m lines "u v"
/// (0-based, whitespace separated). Lines starting with '#' are skipped.
EdgeList read_edge_list(std::istream& in);

Graph parse_edge_list(const std::string& text);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace eccb

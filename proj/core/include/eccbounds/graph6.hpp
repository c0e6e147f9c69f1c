#pragma once

#include <string>
#include <string_view>

#include "eccbounds/graph.hpp"

namespace eccb {

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are ignored. Throws GraphError(malformed_graph6) on a bad
/// length prefix, a byte outside 63..126, a wrong body length, or nonzero
/// padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes without header or newline.
std::string to_graph6(const Graph& g);

}  // namespace eccb

#include "eccbounds/edge_list_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eccb {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& why) {
  throw GraphError(GraphErrc::malformed_edge_list,
                   "edge list line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

EdgeList read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    fail(line_no, "missing \"n m\" header");
  }
  long n = 0;
  long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
      fail(line_no, "expected \"n m\"");
    }
  }
  if (n < 1 || m < 0) {
    fail(line_no, "vertex count must be positive and edge count nonnegative");
  }
  if (n > kMaxVertices) {
    throw GraphError(GraphErrc::too_many_vertices,
                     "edge list declares " + std::to_string(n) + " vertices; at most " +
                         std::to_string(kMaxVertices) + " are supported");
  }
  EdgeList list{static_cast<int>(n), {}};
  list.edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long u = 0;
    long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      fail(line_no, "expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrc::vertex_out_of_range,
                       "edge list line " + std::to_string(line_no) + ": vertex outside 0.." +
                           std::to_string(n - 1));
    }
    list.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (next_content_line(in, line, line_no)) {
    fail(line_no, "trailing content after " + std::to_string(m) + " edges");
  }
  return list;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return Graph::from_edge_list(read_edge_list(in));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

}  // namespace eccb

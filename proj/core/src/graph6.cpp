#include "eccbounds/graph6.hpp"

#include <array>

namespace eccb {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(const std::string& why) {
  throw GraphError(GraphErrc::malformed_graph6, "graph6: " + why);
}

int chunk(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) {
    fail("byte " + std::to_string(v) + " outside printable range 63..126");
  }
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  if (line.empty()) {
    fail("empty line");
  }

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = chunk(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) {
      fail("truncated 36-bit length header");
    }
    for (std::size_t i = 2; i < 8; ++i) {
      n = (n << 6) | chunk(line[i]);
    }
    if (n < 258048) {
      fail("36-bit length header used for n < 258048");
    }
    pos = 8;
  } else {
    if (line.size() < 4) {
      fail("truncated 18-bit length header");
    }
    for (std::size_t i = 1; i < 4; ++i) {
      n = (n << 6) | chunk(line[i]);
    }
    if (n < 63) {
      fail("18-bit length header used for n < 63");
    }
    pos = 4;
  }
  if (n == 0) {
    throw GraphError(GraphErrc::empty_graph, "graph6: graph has no vertices");
  }
  if (n > kMaxVertices) {
    throw GraphError(GraphErrc::too_many_vertices,
                     "graph6: graph has " + std::to_string(n) + " vertices; at most " +
                         std::to_string(kMaxVertices) + " are supported");
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(pair_count(order));
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos != body) {
    fail("expected " + std::to_string(body) + " body bytes for n=" + std::to_string(order) +
         ", found " + std::to_string(line.size() - pos));
  }

  std::array<VertexSet, kMaxVertices> rows{};
  std::size_t bit = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int c = chunk(line[pos + bit / 6]);
      if ((c >> (5 - bit % 6)) & 1) {
        rows[u] |= VertexSet{1} << v;
        rows[v] |= VertexSet{1} << u;
      }
    }
  }
  if (bit % 6 != 0) {
    const int last = chunk(line[pos + body - 1]);
    const int pad = static_cast<int>(6 - bit % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      fail("nonzero padding bits");
    }
  }
  // Every body byte must be in range even when it carries no set bits.
  for (std::size_t i = pos; i < line.size(); ++i) {
    chunk(line[i]);
  }
  return Graph::from_rows(order, std::span<const VertexSet>(rows.data(), order));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  }
  return out;
}

}  // namespace eccb

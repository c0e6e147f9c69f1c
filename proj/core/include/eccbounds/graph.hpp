#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eccb {

/// Largest supported vertex count; one 64-bit row per vertex.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

enum class GraphErrc {
  self_loop = 1,
  duplicate_edge,
  vertex_out_of_range,
  too_many_vertices,
  empty_graph,
  asymmetric_adjacency,
  malformed_graph6,
  malformed_edge_list,
  disconnected,
};

const char* to_string(GraphErrc code) noexcept;

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex count plus 0-based unordered pairs.
struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as one
/// neighbor bit-set per vertex.
class Graph {
 public:
  /// Single isolated vertex.
  Graph() : Graph(1) {}

  /// Validates ids, rejects loops and repeated pairs.
  static Graph from_edge_list(const EdgeList& list);

  /// Builds from raw rows. Rows must be symmetric and loop-free.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  /// Bit k of `mask` selects the k-th pair in column-major upper-triangle
  /// order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... This is the graph6
  /// bit order, so ascending masks enumerate labeled graphs canonically.
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  VertexSet neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1u; }

  /// Mask with bits 0..n-1 set.
  VertexSet all_vertices() const noexcept;

  std::span<const VertexSet> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  /// Edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  EdgeList to_edge_list() const { return {n_, edges()}; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  explicit Graph(int n);

  int n_ = 1;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

bool is_connected(const Graph& g) noexcept;

Graph complement(const Graph& g);

/// Number of vertex pairs, i.e. bits in a pair mask for `n` vertices.
constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

}  // namespace eccb

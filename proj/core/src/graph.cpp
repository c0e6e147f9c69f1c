#include "eccbounds/graph.hpp"

#include <algorithm>
#include <bit>

namespace eccb {

const char* to_string(GraphErrc code) noexcept {
  switch (code) {
    case GraphErrc::self_loop: return "self_loop";
    case GraphErrc::duplicate_edge: return "duplicate_edge";
    case GraphErrc::vertex_out_of_range: return "vertex_out_of_range";
    case GraphErrc::too_many_vertices: return "too_many_vertices";
    case GraphErrc::empty_graph: return "empty_graph";
    case GraphErrc::asymmetric_adjacency: return "asymmetric_adjacency";
    case GraphErrc::malformed_graph6: return "malformed_graph6";
    case GraphErrc::malformed_edge_list: return "malformed_edge_list";
    case GraphErrc::disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 1) {
    throw GraphError(GraphErrc::empty_graph, "graph must have at least one vertex");
  }
  if (n > kMaxVertices) {
    throw GraphError(GraphErrc::too_many_vertices,
                     "graph has " + std::to_string(n) + " vertices; at most " +
                         std::to_string(kMaxVertices) + " are supported");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edge_list(const EdgeList& list) {
  Graph g(list.n);
  for (const auto& [u, v] : list.edges) {
    if (u < 0 || v < 0 || u >= list.n || v >= list.n) {
      throw GraphError(GraphErrc::vertex_out_of_range,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has a vertex outside 0.." + std::to_string(list.n - 1));
    }
    if (u == v) {
      throw GraphError(GraphErrc::self_loop, "self-loop at vertex " + std::to_string(u));
    }
    if (g.adjacent(u, v)) {
      throw GraphError(GraphErrc::duplicate_edge,
                       "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.rows_[u] |= VertexSet{1} << v;
    g.rows_[v] |= VertexSet{1} << u;
    ++g.m_;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) != n) {
    throw GraphError(GraphErrc::vertex_out_of_range, "row count does not match vertex count");
  }
  const VertexSet all = g.all_vertices();
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) {
      throw GraphError(GraphErrc::vertex_out_of_range,
                       "row " + std::to_string(v) + " references a vertex >= n");
    }
    if ((rows[v] >> v) & 1u) {
      throw GraphError(GraphErrc::self_loop, "self-loop at vertex " + std::to_string(v));
    }
    g.rows_[v] = rows[v];
    degree_sum += std::popcount(rows[v]);
  }
  for (int u = 0; u < n; ++u) {
    for (VertexSet rest = rows[u]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!g.adjacent(v, u)) {
        throw GraphError(GraphErrc::asymmetric_adjacency,
                         "adjacency not symmetric at (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
      }
    }
  }
  g.m_ = degree_sum / 2;
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  if (pair_count(n) > 64) {
    throw GraphError(GraphErrc::too_many_vertices, "pair masks cover at most 11 vertices");
  }
  if (pair_count(n) < 64 && (mask >> pair_count(n)) != 0) {
    throw GraphError(GraphErrc::vertex_out_of_range, "pair mask has bits beyond n(n-1)/2");
  }
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1u) {
        g.rows_[u] |= VertexSet{1} << v;
        g.rows_[v] |= VertexSet{1} << u;
        ++g.m_;
      }
    }
  }
  return g;
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (VertexSet rest = rows_[u] & ~((VertexSet{2} << u) - 1); rest != 0; rest &= rest - 1) {
      out.push_back({u, std::countr_zero(rest)});
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

bool is_connected(const Graph& g) noexcept {
  const VertexSet all = g.all_vertices();
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.all_vertices();
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) {
    rows[v] = ~g.neighbors(v) & all & ~(VertexSet{1} << v);
  }
  return Graph::from_rows(n, std::span<const VertexSet>(rows.data(), n));
}

}  // namespace eccb

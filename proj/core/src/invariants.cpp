#include "eccbounds/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace eccb {

namespace {

/// Breadth-first levels from `source`. Calls visit(vertex_set, depth) for
/// every nonempty level after the source. Returns the set of reached vertices.
template <class Visit>
VertexSet bfs_levels(const Graph& g, int source, Visit&& visit) {
  VertexSet seen = VertexSet{1} << source;
  VertexSet frontier = seen;
  int depth = 0;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= frontier;
    if (frontier != 0) {
      visit(frontier, ++depth);
    }
  }
  return seen;
}

[[noreturn]] void throw_disconnected(int source) {
  throw GraphError(GraphErrc::disconnected,
                   "graph is disconnected: vertex " + std::to_string(source) +
                       " cannot reach every vertex");
}

Int128 lcm(Int128 a, Int128 b) { return a / gcd(a, b) * b; }

}  // namespace

DistanceTable all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    const VertexSet reached = bfs_levels(g, s, [&](VertexSet level, int depth) {
      for (; level != 0; level &= level - 1) {
        cells[static_cast<std::size_t>(s) * n + std::countr_zero(level)] =
            static_cast<std::uint8_t>(depth);
      }
    });
    if (reached != g.all_vertices()) {
      throw_disconnected(s);
    }
  }
  return DistanceTable(n, std::move(cells));
}

std::int64_t modified_eccentric_connectivity_by_edges(const Graph& g, const VertexProfile& p) {
  std::int64_t total = 0;
  for (const auto& [u, v] : g.edges()) {
    total += static_cast<std::int64_t>(p.degree[u]) * p.eccentricity[v] +
             static_cast<std::int64_t>(p.degree[v]) * p.eccentricity[u];
  }
  return total;
}

InvariantSet compute_all(const Graph& g) {
  const int n = g.order();
  InvariantSet s;
  s.n = n;
  s.m = g.size();
  VertexProfile& p = s.profile;
  p.degree.resize(n);
  p.neighbor_degree_sum.assign(n, 0);
  p.eccentricity.assign(n, 0);
  p.distance_sum.assign(n, 0);

  for (int v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
  }
  for (int v = 0; v < n; ++v) {
    int sum = 0;
    for (VertexSet rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
      sum += p.degree[std::countr_zero(rest)];
    }
    p.neighbor_degree_sum[v] = sum;
  }

  // Ordered-pair counts by distance; each unordered pair is seen twice.
  std::array<std::int64_t, kMaxVertices> pairs_at{};
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    int dist_sum = 0;
    const VertexSet reached = bfs_levels(g, v, [&](VertexSet level, int depth) {
      const int count = std::popcount(level);
      ecc = depth;
      dist_sum += count * depth;
      pairs_at[depth] += count;
    });
    if (reached != g.all_vertices()) {
      throw_disconnected(v);
    }
    p.eccentricity[v] = ecc;
    p.distance_sum[v] = dist_sum;
  }

  s.max_degree = *std::max_element(p.degree.begin(), p.degree.end());
  s.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
  s.radius = *std::min_element(p.eccentricity.begin(), p.eccentricity.end());
  s.diameter = *std::max_element(p.eccentricity.begin(), p.eccentricity.end());

  for (int v = 0; v < n; ++v) {
    const std::int64_t deg = p.degree[v];
    const std::int64_t ecc = p.eccentricity[v];
    s.total_eccentricity += ecc;
    s.first_zagreb += deg * deg;
    s.first_zagreb_eccentricity += ecc * ecc;
    s.wiener += p.distance_sum[v];
    s.xi_c += static_cast<std::int64_t>(p.neighbor_degree_sum[v]) * ecc;
    s.eccentric_connectivity += deg * ecc;
  }
  s.wiener /= 2;
  for (const auto& [u, v] : g.edges()) {
    s.second_zagreb += static_cast<std::int64_t>(p.degree[u]) * p.degree[v];
    s.second_zagreb_eccentricity += static_cast<std::int64_t>(p.eccentricity[u]) * p.eccentricity[v];
  }

  Int128 common = 1;
  for (int k = 1; k <= s.diameter; ++k) {
    if (pairs_at[k] != 0) {
      common = lcm(common, k);
    }
  }
  Int128 numerator = 0;
  for (int k = 1; k <= s.diameter; ++k) {
    numerator += static_cast<Int128>(pairs_at[k] / 2) * (common / k);
  }
  s.harary = Rational(numerator, common).reduced();

  if (modified_eccentric_connectivity_by_edges(g, p) != s.xi_c) {
    throw std::logic_error("vertex-sum and edge-sum forms of the modified eccentric "
                           "connectivity index disagree");
  }
  return s;
}

std::int64_t modified_eccentric_connectivity(const Graph& g) { return compute_all(g).xi_c; }

}  // namespace eccb

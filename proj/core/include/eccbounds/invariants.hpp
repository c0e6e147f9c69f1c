#pragma once

#include <cstdint>
#include <vector>

#include "eccbounds/graph.hpp"
#include "eccbounds/rational.hpp"

namespace eccb {

/// Shortest-path lengths between all vertex pairs of a connected graph.
class DistanceTable {
 public:
  DistanceTable(int n, std::vector<std::uint8_t> cells) : n_(n), cells_(std::move(cells)) {}

  int order() const noexcept { return n_; }
  int at(int u, int v) const noexcept { return cells_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
};

/// One BFS per vertex over the bit-set rows. Throws
/// GraphError(disconnected) if some vertex is unreachable.
DistanceTable all_pairs_distances(const Graph& g);

/// Per-vertex quantities, indexed by vertex id.
struct VertexProfile {
  std::vector<int> degree;
  /// Sum of the degrees of the neighbors of v (not the global minimum degree).
  std::vector<int> neighbor_degree_sum;
  std::vector<int> eccentricity;
  /// Sum of distances from v to every other vertex.
  std::vector<int> distance_sum;
};

struct InvariantSet {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  int radius = 0;
  int diameter = 0;
  std::int64_t total_eccentricity = 0;
  std::int64_t first_zagreb = 0;
  std::int64_t second_zagreb = 0;
  std::int64_t first_zagreb_eccentricity = 0;
  std::int64_t second_zagreb_eccentricity = 0;
  std::int64_t wiener = 0;
  /// Sum of 1/d(u,v) over unordered pairs, in lowest terms.
  Rational harary;
  /// Modified eccentric connectivity: sum over v of neighbor_degree_sum(v) * ecc(v).
  std::int64_t xi_c = 0;
  /// Sum over v of deg(v) * ecc(v).
  std::int64_t eccentric_connectivity = 0;
  VertexProfile profile;
};

/// Every invariant in one pass of n BFS runs. The modified eccentric
/// connectivity is computed both per vertex and per edge; a mismatch throws
/// std::logic_error. A single vertex yields the all-zero set.
InvariantSet compute_all(const Graph& g);

std::int64_t modified_eccentric_connectivity(const Graph& g);

/// Edge-sum form: sum over edges uv of deg(u) ecc(v) + deg(v) ecc(u).
std::int64_t modified_eccentric_connectivity_by_edges(const Graph& g, const VertexProfile& p);

}  // namespace eccb

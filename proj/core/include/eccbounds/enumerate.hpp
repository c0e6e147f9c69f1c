#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eccbounds/bounds.hpp"
#include "eccbounds/graph.hpp"

namespace eccb {

/// Largest order the built-in enumerator accepts.
inline constexpr int kMaxEnumerationOrder = 8;
/// Default ceiling without allow_large.
inline constexpr int kDefaultEnumerationOrder = 7;

/// Visits every connected labeled graph on n vertices whose pair mask lies
/// in [mask_begin, mask_end), in ascending mask order.
void for_each_connected_labeled_graph(int n, std::uint64_t mask_begin, std::uint64_t mask_end,
                                      const std::function<void(const Graph&, std::uint64_t)>& visit);

void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Materialized form for small n. Throws std::out_of_range unless 1 <= n <= 8.
std::vector<Graph> connected_labeled_graphs(int n);

/// Pulls graphs from newline-separated graph6 text. Blank lines are ignored,
/// disconnected graphs are skipped and counted. A malformed line throws
/// GraphError whose message carries the line number.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next();

  int line_number() const noexcept { return line_; }
  /// Line on which the most recently returned graph appeared.
  int last_graph_line() const noexcept { return last_graph_line_; }
  std::uint64_t skipped_disconnected() const noexcept { return skipped_; }

 private:
  std::istream& in_;
  int line_ = 0;
  int last_graph_line_ = 0;
  std::uint64_t skipped_ = 0;
};

struct Graph6Stream {
  std::vector<Graph> graphs;
  std::vector<int> lines;
  std::uint64_t skipped_disconnected = 0;
};

/// Reads a whole graph6 file. Throws std::runtime_error if the file cannot
/// be opened, GraphError on a malformed line.
Graph6Stream read_graph6_stream(const std::filesystem::path& path);
Graph6Stream read_graph6_stream(std::istream& in);

/// Independent recomputation over adjacency lists and queue-based BFS; used
/// to spot-check the bit-set kernel during sweeps.
std::int64_t naive_modified_eccentric_connectivity(const Graph& g);

struct SweepConfig {
  int n_min = 2;
  int n_max = kDefaultEnumerationOrder;
  /// Empty means every id except T12_NG, plus T12_NG when
  /// include_nordhaus_gaddum is set. A nonempty list is used as given.
  std::vector<BoundId> bounds;
  bool include_nordhaus_gaddum = true;
  /// Unset: built-in enumeration. Set: graphs from this graph6 file.
  std::optional<std::filesystem::path> graph6_stream;
  int workers = 1;
  std::size_t witness_cap = 10;
  bool allow_large = false;
  /// Every k-th graph (by mask or line number) is rechecked by the naive
  /// oracle; 0 disables.
  std::uint64_t oracle_stride = 100;

  /// Throws std::invalid_argument on an invalid combination.
  void validate() const;
  /// Bounds actually evaluated, in enum order.
  std::vector<BoundId> effective_bounds() const;
};

/// Count plus the lexicographically smallest `cap` graph6 strings.
struct WitnessList {
  std::uint64_t count = 0;
  std::vector<std::string> witnesses;

  void add(const std::string& graph6, std::size_t cap);
  void merge(const WitnessList& other, std::size_t cap);
  friend bool operator==(const WitnessList&, const WitnessList&) = default;
};

struct BoundTally {
  BoundId id = BoundId::T1i_L;
  std::uint64_t graphs_checked = 0;
  std::uint64_t holds = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t radicand_negative = 0;
  std::uint64_t predicted_equality = 0;
  WitnessList violations;
  WitnessList equalities;
  WitnessList agreement_failures;
  WitnessList alt_agreement_failures;

  friend bool operator==(const BoundTally&, const BoundTally&) = default;
};

struct VerificationReport {
  SweepConfig config;
  std::uint64_t total_graphs = 0;
  /// Connected graphs per order; index = n.
  std::vector<std::uint64_t> graphs_by_order;
  std::uint64_t skipped_disconnected = 0;
  std::vector<BoundTally> bounds;
  WitnessList identity_failures;
  std::uint64_t oracle_checked = 0;
  WitnessList oracle_mismatches;
  double elapsed_seconds = 0.0;

  const BoundTally* tally(BoundId id) const;
  /// Violations of asserted bounds plus identity and oracle failures.
  std::uint64_t failures() const;
};

/// Runs the configured bounds over every graph in the source. The report
/// (apart from elapsed_seconds) does not depend on `workers`.
VerificationReport sweep(const SweepConfig& cfg);

/// Sweep over an explicit list; `sample_index[i]` drives oracle sampling.
VerificationReport sweep_graphs(const SweepConfig& cfg, const std::vector<Graph>& graphs,
                                const std::vector<std::uint64_t>& sample_index);

}  // namespace eccb

#include "eccbounds/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>

#include "eccbounds/graph6.hpp"
#include "eccbounds/invariants.hpp"

namespace eccb {

void for_each_connected_labeled_graph(int n, std::uint64_t mask_begin, std::uint64_t mask_end,
                                      const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::out_of_range("labeled enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
  const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
  mask_end = std::min(mask_end, limit);
  for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
    const Graph g = Graph::from_pair_mask(n, mask);
    if (is_connected(g)) {
      visit(g, mask);
    }
  }
}

void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& visit) {
  for_each_connected_labeled_graph(n, 0, ~std::uint64_t{0}, visit);
}

std::vector<Graph> connected_labeled_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_labeled_graph(n, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
  return out;
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const GraphError& e) {
      throw GraphError(e.code(), "line " + std::to_string(line_) + ": " + e.what());
    }
    if (!is_connected(g)) {
      ++skipped_;
      continue;
    }
    last_graph_line_ = line_;
    return g;
  }
  return std::nullopt;
}

Graph6Stream read_graph6_stream(std::istream& in) {
  Graph6Reader reader(in);
  Graph6Stream out;
  while (auto g = reader.next()) {
    out.graphs.push_back(*g);
    out.lines.push_back(reader.last_graph_line());
  }
  out.skipped_disconnected = reader.skipped_disconnected();
  return out;
}

Graph6Stream read_graph6_stream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph6 stream " + path.string());
  }
  return read_graph6_stream(in);
}

std::int64_t naive_modified_eccentric_connectivity(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::int64_t total = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int ecc = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      ecc = std::max(ecc, dist[x]);
      for (const int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    std::int64_t neighbor_degrees = 0;
    for (const int u : adj[s]) {
      neighbor_degrees += static_cast<std::int64_t>(adj[u].size());
    }
    total += neighbor_degrees * ecc;
  }
  return total;
}

void SweepConfig::validate() const {
  if (workers < 1) {
    throw std::invalid_argument("worker count must be positive");
  }
  if (witness_cap == 0) {
    throw std::invalid_argument("witness cap must be positive");
  }
  if (graph6_stream) {
    return;
  }
  if (n_min < 2 || n_min > n_max) {
    throw std::invalid_argument("built-in sweep needs 2 <= n_min <= n_max, got " +
                                std::to_string(n_min) + ".." + std::to_string(n_max));
  }
  if (n_max > kMaxEnumerationOrder) {
    throw std::invalid_argument("built-in sweep supports n_max <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  if (n_max > kDefaultEnumerationOrder && !allow_large) {
    throw std::invalid_argument("n_max = " + std::to_string(n_max) +
                                " enumerates 2^28 masks; pass allow_large to confirm");
  }
}

std::vector<BoundId> SweepConfig::effective_bounds() const {
  std::vector<bool> chosen(kBoundCount, bounds.empty());
  for (const BoundId id : bounds) {
    chosen[static_cast<std::size_t>(id)] = true;
  }
  if (bounds.empty()) {
    chosen[static_cast<std::size_t>(BoundId::T12_NG)] = false;
  }
  if (include_nordhaus_gaddum && bounds.empty()) {
    chosen[static_cast<std::size_t>(BoundId::T12_NG)] = true;
  }
  std::vector<BoundId> out;
  for (const BoundId id : all_bound_ids()) {
    if (chosen[static_cast<std::size_t>(id)]) {
      out.push_back(id);
    }
  }
  return out;
}

void WitnessList::add(const std::string& graph6, std::size_t cap) {
  ++count;
  if (witnesses.size() == cap && !(graph6 < witnesses.back())) {
    return;
  }
  witnesses.insert(std::upper_bound(witnesses.begin(), witnesses.end(), graph6), graph6);
  if (witnesses.size() > cap) {
    witnesses.pop_back();
  }
}

void WitnessList::merge(const WitnessList& other, std::size_t cap) {
  count += other.count;
  std::vector<std::string> combined;
  combined.reserve(witnesses.size() + other.witnesses.size());
  std::merge(witnesses.begin(), witnesses.end(), other.witnesses.begin(), other.witnesses.end(),
             std::back_inserter(combined));
  if (combined.size() > cap) {
    combined.resize(cap);
  }
  witnesses = std::move(combined);
}

const BoundTally* VerificationReport::tally(BoundId id) const {
  for (const auto& t : bounds) {
    if (t.id == id) {
      return &t;
    }
  }
  return nullptr;
}

std::uint64_t VerificationReport::failures() const {
  std::uint64_t total = identity_failures.count + oracle_mismatches.count;
  for (const auto& t : bounds) {
    if (bound_info(t.id).asserted) {
      total += t.violations.count;
    }
  }
  return total;
}

namespace {

struct Partial {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_order = std::vector<std::uint64_t>(kMaxVertices + 1, 0);
  std::vector<BoundTally> tallies;
  WitnessList identity_failures;
  std::uint64_t oracle_checked = 0;
  WitnessList oracle_mismatches;
};

bool identities_hold(const InvariantSet& s) {
  const VertexProfile& p = s.profile;
  std::int64_t neighbor_sum = 0;
  std::int64_t weighted = 0;
  for (int v = 0; v < s.n; ++v) {
    const int deg = p.degree[v];
    const int ecc = p.eccentricity[v];
    neighbor_sum += p.neighbor_degree_sum[v];
    weighted += static_cast<std::int64_t>(deg) * p.neighbor_degree_sum[v];
    if (s.n >= 2) {
      if (ecc > s.n - deg) {
        return false;
      }
      if (static_cast<std::int64_t>(ecc) * (s.n - 1) < p.distance_sum[v]) {
        return false;
      }
      if (p.distance_sum[v] < 2 * s.n - 2 - deg) {
        return false;
      }
      if (p.neighbor_degree_sum[v] < deg) {
        return false;
      }
    }
  }
  return neighbor_sum == s.first_zagreb && weighted == 2 * s.second_zagreb &&
         s.xi_c >= s.eccentric_connectivity && Rational(s.wiener) >= s.harary &&
         s.radius <= s.diameter && s.diameter <= 2 * s.radius;
}

void process(const Graph& g, std::uint64_t sample_index, const SweepConfig& cfg,
             const std::vector<BoundId>& ids, Partial& out) {
  std::optional<std::string> code;
  const auto graph6 = [&]() -> const std::string& {
    if (!code) {
      code = to_graph6(g);
    }
    return *code;
  };
  const std::size_t cap = cfg.witness_cap;

  ++out.total;
  ++out.by_order[g.order()];

  InvariantSet inv;
  try {
    inv = compute_all(g);
  } catch (const std::logic_error&) {
    out.identity_failures.add(graph6(), cap);
    return;
  }
  if (!identities_hold(inv)) {
    out.identity_failures.add(graph6(), cap);
  }
  if (cfg.oracle_stride != 0 && sample_index % cfg.oracle_stride == 0) {
    ++out.oracle_checked;
    if (naive_modified_eccentric_connectivity(g) != inv.xi_c) {
      out.oracle_mismatches.add(graph6(), cap);
    }
  }

  for (std::size_t i = 0; i < ids.size(); ++i) {
    BoundTally& t = out.tallies[i];
    ++t.graphs_checked;
    const BoundOutcome o = evaluate(inv, g, ids[i]);
    if (!o.applicable) {
      ++t.inapplicable;
      continue;
    }
    if (o.holds) {
      ++t.holds;
    } else {
      t.violations.add(graph6(), cap);
    }
    if (o.radicand_negative) {
      ++t.radicand_negative;
    }
    if (o.is_equality) {
      t.equalities.add(graph6(), cap);
    }
    if (o.predicted_equality) {
      if (*o.predicted_equality) {
        ++t.predicted_equality;
      }
      if (*o.predicted_equality != o.is_equality) {
        t.agreement_failures.add(graph6(), cap);
      }
    }
    if (o.alt_predicted_equality && *o.alt_predicted_equality != o.is_equality) {
      t.alt_agreement_failures.add(graph6(), cap);
    }
  }
}

Partial fresh_partial(const std::vector<BoundId>& ids) {
  Partial p;
  for (const BoundId id : ids) {
    BoundTally t;
    t.id = id;
    p.tallies.push_back(std::move(t));
  }
  return p;
}

void merge_into(Partial& acc, const Partial& part, std::size_t cap) {
  acc.total += part.total;
  for (std::size_t n = 0; n < acc.by_order.size(); ++n) {
    acc.by_order[n] += part.by_order[n];
  }
  for (std::size_t i = 0; i < acc.tallies.size(); ++i) {
    BoundTally& a = acc.tallies[i];
    const BoundTally& b = part.tallies[i];
    a.graphs_checked += b.graphs_checked;
    a.holds += b.holds;
    a.inapplicable += b.inapplicable;
    a.radicand_negative += b.radicand_negative;
    a.predicted_equality += b.predicted_equality;
    a.violations.merge(b.violations, cap);
    a.equalities.merge(b.equalities, cap);
    a.agreement_failures.merge(b.agreement_failures, cap);
    a.alt_agreement_failures.merge(b.alt_agreement_failures, cap);
  }
  acc.identity_failures.merge(part.identity_failures, cap);
  acc.oracle_checked += part.oracle_checked;
  acc.oracle_mismatches.merge(part.oracle_mismatches, cap);
}

/// Runs `task_count` independent tasks on `workers` threads, each thread
/// folding its tasks into its own Partial; partials are merged at the end.
template <class RunTask>
Partial run_parallel(const SweepConfig& cfg, const std::vector<BoundId>& ids, std::size_t task_count,
                     RunTask&& run_task) {
  const auto workers = static_cast<std::size_t>(
      std::max(1, std::min<int>(cfg.workers, static_cast<int>(std::max<std::size_t>(task_count, 1)))));
  std::vector<Partial> partials(workers, fresh_partial(ids));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&](std::size_t w) {
    try {
      for (std::size_t task = next++; task < task_count; task = next++) {
        run_task(task, partials[w]);
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      next = task_count;
    }
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back(worker, w);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  Partial total = fresh_partial(ids);
  for (const Partial& p : partials) {
    merge_into(total, p, cfg.witness_cap);
  }
  return total;
}

VerificationReport finish(const SweepConfig& cfg, const std::vector<BoundId>& ids, Partial&& total,
                          std::chrono::steady_clock::time_point started) {
  VerificationReport report;
  report.config = cfg;
  report.config.bounds = ids;
  report.total_graphs = total.total;
  std::size_t top = total.by_order.size();
  while (top > 0 && total.by_order[top - 1] == 0) {
    --top;
  }
  total.by_order.resize(top);
  report.graphs_by_order = std::move(total.by_order);
  report.bounds = std::move(total.tallies);
  report.identity_failures = std::move(total.identity_failures);
  report.oracle_checked = total.oracle_checked;
  report.oracle_mismatches = std::move(total.oracle_mismatches);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

constexpr std::uint64_t kMasksPerTask = std::uint64_t{1} << 14;
constexpr std::size_t kGraphsPerTask = 2048;

}  // namespace

VerificationReport sweep_graphs(const SweepConfig& cfg, const std::vector<Graph>& graphs,
                                const std::vector<std::uint64_t>& sample_index) {
  cfg.validate();
  if (sample_index.size() != graphs.size()) {
    throw std::invalid_argument("sample index list must match the graph list");
  }
  const auto started = std::chrono::steady_clock::now();
  const std::vector<BoundId> ids = cfg.effective_bounds();
  for (const Graph& g : graphs) {
    if (!is_connected(g)) {
      throw GraphError(GraphErrc::disconnected, "sweep input contains a disconnected graph");
    }
  }
  const std::size_t tasks = (graphs.size() + kGraphsPerTask - 1) / kGraphsPerTask;
  Partial total = run_parallel(cfg, ids, tasks, [&](std::size_t task, Partial& out) {
    const std::size_t end = std::min(graphs.size(), (task + 1) * kGraphsPerTask);
    for (std::size_t i = task * kGraphsPerTask; i < end; ++i) {
      process(graphs[i], sample_index[i], cfg, ids, out);
    }
  });
  return finish(cfg, ids, std::move(total), started);
}

VerificationReport sweep(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.graph6_stream) {
    const auto started = std::chrono::steady_clock::now();
    Graph6Stream stream = read_graph6_stream(*cfg.graph6_stream);
    std::vector<std::uint64_t> index(stream.lines.begin(), stream.lines.end());
    VerificationReport report = sweep_graphs(cfg, stream.graphs, index);
    report.skipped_disconnected = stream.skipped_disconnected;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::vector<BoundId> ids = cfg.effective_bounds();
  struct Task {
    int n;
    std::uint64_t begin;
    std::uint64_t end;
  };
  std::vector<Task> tasks;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t begin = 0; begin < limit; begin += kMasksPerTask) {
      tasks.push_back({n, begin, std::min(limit, begin + kMasksPerTask)});
    }
  }
  Partial total = run_parallel(cfg, ids, tasks.size(), [&](std::size_t i, Partial& out) {
    const Task& t = tasks[i];
    for_each_connected_labeled_graph(t.n, t.begin, t.end, [&](const Graph& g, std::uint64_t mask) {
      process(g, mask, cfg, ids, out);
    });
  });
  return finish(cfg, ids, std::move(total), started);
}

}  // namespace eccb

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "eccbounds/bounds.hpp"
#include "eccbounds/edge_list_io.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/families.hpp"
#include "eccbounds/graph6.hpp"
#include "eccbounds/invariants.hpp"
#include "eccbounds/report_io.hpp"

namespace eccb::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised for bad input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool csv = false;
  std::string output;
};

struct InputOptions {
  std::string path = "-";
  std::string format;
};

struct SweepOptions {
  int n_min = 2;
  int n_max = kDefaultEnumerationOrder;
  std::vector<std::string> bounds;
  bool no_nordhaus_gaddum = false;
  std::string graph6;
  int workers = 0;
  std::size_t witnesses = 10;
  bool allow_large = false;
  std::uint64_t oracle_stride = 100;
  bool no_run_info = false;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open input " + path);
  }
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string infer_format(const InputOptions& opts, const std::string& text) {
  if (!opts.format.empty()) {
    return opts.format;
  }
  const auto dot = opts.path.rfind('.');
  if (opts.path != "-" && dot != std::string::npos) {
    const std::string ext = opts.path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") {
      return "graph6";
    }
    if (ext == "txt" || ext == "el" || ext == "edges" || ext == "edgelist") {
      return "edgelist";
    }
  }
  // No usable extension: an edge list starts with "n m"; graph6 has no blanks.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1).find_first_of(" \t") == std::string::npos
               ? "graph6"
               : "edgelist";
  }
  return "graph6";
}

std::vector<Graph> load_graphs(const InputOptions& opts, std::istream& in) {
  const std::string text = read_all(opts.path, in);
  const std::string format = infer_format(opts, text);
  std::vector<Graph> graphs;
  if (format == "edgelist") {
    graphs.push_back(parse_edge_list(text));
  } else {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const GraphError& e) {
        throw GraphError(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (graphs.empty()) {
    throw UsageError("input contains no graph");
  }
  for (const Graph& g : graphs) {
    if (!is_connected(g)) {
      throw GraphError(GraphErrc::disconnected,
                       "input graph " + to_graph6(g) + " is disconnected; invariants need a connected graph");
    }
  }
  return graphs;
}

void emit(const GlobalOptions& global, std::ostream& out, const std::string& payload) {
  if (global.output.empty() || global.output == "-") {
    out << payload;
    return;
  }
  std::ofstream file(global.output, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open output " + global.output);
  }
  file << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Object for a single graph, array otherwise.
json one_or_many(std::vector<json> items) {
  if (items.size() == 1) {
    return std::move(items.front());
  }
  return json(std::move(items));
}

std::string strip_header(const std::string& csv) { return csv.substr(csv.find('\n') + 1); }

int run_compute(const GlobalOptions& global, const InputOptions& input, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs = load_graphs(input, in);
  std::vector<json> items;
  std::string csv;
  for (const Graph& g : graphs) {
    const InvariantSet inv = compute_all(g);
    if (global.csv) {
      csv += csv.empty() ? to_csv(inv) : strip_header(to_csv(inv));
    } else {
      json j;
      j["graph6"] = to_graph6(g);
      j.update(to_json(inv));
      items.push_back(std::move(j));
    }
  }
  emit(global, out, global.csv ? csv : dump(one_or_many(std::move(items))));
  return kOk;
}

int run_family(const GlobalOptions& global, const std::string& text, std::ostream& out) {
  const FamilyEvaluation eval = evaluate_family(FamilySpec::parse(text));
  emit(global, out, global.csv ? to_csv(eval) : dump(to_json(eval)));
  return kOk;
}

int run_verify(const GlobalOptions& global, const InputOptions& input, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs = load_graphs(input, in);
  std::vector<json> items;
  std::string csv;
  std::uint64_t violations = 0;
  for (const Graph& g : graphs) {
    const InvariantSet inv = compute_all(g);
    std::vector<BoundCheck> checks = check_all(g, inv);
    checks.push_back(check_nordhaus_gaddum(g, inv));
    std::uint64_t here = 0;
    json list = json::array();
    for (const BoundCheck& c : checks) {
      if (c.applicable && !c.holds && bound_info(c.id).asserted) {
        ++here;
      }
      list.push_back(to_json(c));
    }
    violations += here;
    if (global.csv) {
      csv += csv.empty() ? to_csv(checks) : strip_header(to_csv(checks));
    } else {
      json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.order();
      j["m"] = g.size();
      j["checks"] = std::move(list);
      j["asserted_violations"] = here;
      items.push_back(std::move(j));
    }
  }
  emit(global, out, global.csv ? csv : dump(one_or_many(std::move(items))));
  return violations == 0 ? kOk : kViolations;
}

int default_workers() {
  if (const char* env = std::getenv("ECC_BOUNDS_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<int>(value);
    }
    throw UsageError("ECC_BOUNDS_WORKERS must be a positive integer, got \"" + std::string(env) + "\"");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int run_sweep(const GlobalOptions& global, const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.n_min = opts.n_min;
  cfg.n_max = opts.n_max;
  for (const std::string& token : opts.bounds) {
    const std::vector<BoundId> ids = bound_ids_matching(token);
    if (ids.empty()) {
      throw UsageError("unknown bound id \"" + token + "\"");
    }
    cfg.bounds.insert(cfg.bounds.end(), ids.begin(), ids.end());
  }
  cfg.include_nordhaus_gaddum = !opts.no_nordhaus_gaddum;
  if (!opts.graph6.empty()) {
    cfg.graph6_stream = opts.graph6;
  }
  cfg.workers = opts.workers > 0 ? opts.workers : default_workers();
  cfg.witness_cap = opts.witnesses;
  cfg.allow_large = opts.allow_large;
  cfg.oracle_stride = opts.oracle_stride;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const VerificationReport report = sweep(cfg);
  if (report.skipped_disconnected != 0) {
    err << "warning: skipped " << report.skipped_disconnected << " disconnected graph(s)\n";
  }
  emit(global, out, global.csv ? to_csv(report) : dump(to_json(report, !opts.no_run_info)));
  return report.failures() == 0 ? kOk : kViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified eccentric connectivity index: invariants, family checks and bound sweeps",
               "ecc-bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  bool json_flag = false;
  auto* json_opt = app.add_flag("--json", json_flag, "JSON report (default)");
  app.add_flag("--csv", global.csv, "CSV report")->excludes(json_opt);
  app.add_option("-o,--output", global.output, "Write the report here instead of stdout");

  InputOptions compute_in;
  auto* compute = app.add_subcommand("compute", "Compute every invariant of the input graph(s)");
  compute->add_option("input", compute_in.path, "Input file, '-' for stdin")->capture_default_str();
  compute->add_option("-f,--format", compute_in.format, "edgelist | graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string family_text;
  auto* family = app.add_subcommand("family", "Build a named family and compare with its closed form");
  family->add_option("spec", family_text, "kind:params, e.g. prism:6, multipartite:2,3,3")->required();

  InputOptions verify_in;
  auto* verify = app.add_subcommand("verify", "Evaluate every bound on the input graph(s)");
  verify->add_option("input", verify_in.path, "Input file, '-' for stdin")->capture_default_str();
  verify->add_option("-f,--format", verify_in.format, "edgelist | graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check bounds over all small connected graphs");
  sweep_cmd->add_option("--n-min", sweep_opts.n_min, "Smallest order")->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_opts.n_max, "Largest order")->capture_default_str();
  sweep_cmd->add_option("--bounds", sweep_opts.bounds, "Bound ids or groups (e.g. T13,T1ii)")
      ->delimiter(',');
  sweep_cmd->add_flag("--no-nordhaus-gaddum", sweep_opts.no_nordhaus_gaddum,
                      "Skip the complement bound when no --bounds filter is given");
  sweep_cmd->add_option("--graph6", sweep_opts.graph6, "Read graphs from a graph6 file instead");
  sweep_cmd->add_option("-w,--workers", sweep_opts.workers,
                        "Worker threads (default: ECC_BOUNDS_WORKERS or hardware concurrency)");
  sweep_cmd->add_option("--witnesses", sweep_opts.witnesses, "Witnesses kept per category")
      ->capture_default_str();
  sweep_cmd->add_flag("--allow-large", sweep_opts.allow_large, "Permit n = 8 (2^28 masks)");
  sweep_cmd->add_option("--oracle-stride", sweep_opts.oracle_stride,
                        "Recheck every k-th graph with the naive oracle; 0 disables")
      ->capture_default_str();
  sweep_cmd->add_flag("--no-run-info", sweep_opts.no_run_info,
                      "Omit worker count and timing so reports compare byte for byte");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*compute) {
      return run_compute(global, compute_in, in, out);
    }
    if (*family) {
      return run_family(global, family_text, out);
    }
    if (*verify) {
      return run_verify(global, verify_in, in, out);
    }
    return run_sweep(global, sweep_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace eccb::cli

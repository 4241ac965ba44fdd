#include "geodetic/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "geodetic/bounds.hpp"
#include "geodetic/cli/bench.hpp"
#include "geodetic/edge_list.hpp"
#include "geodetic/errors.hpp"
#include "geodetic/exact.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/greedy.hpp"
#include "geodetic/ilp.hpp"
#include "geodetic/locally_greedy.hpp"

namespace geodetic::cli {
namespace {

/// Bad flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<double> density;
  std::optional<std::size_t> edges;
  std::uint64_t seed = 0;
  double rewire = 0.05;
  std::string output;
};

struct SolveArgs {
  std::string graph;
  std::string algorithm = "all";
  bool one_based = false;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> node_limit;
  bool show_sets = false;
};

struct BenchArgs {
  std::string scheme = "standard";
  std::vector<std::string> families{"er", "ws", "ba"};
  std::uint64_t seed = 1;
  std::string output;
  std::size_t max_n = 0;
  std::size_t exact_max_n = 30;
  std::optional<double> exact_time_limit;
  unsigned jobs = 1;
  bool pretty = false;
  bool no_times = false;
};

struct ExportArgs {
  std::string graph;
  std::string output;
  bool one_based = false;
};

struct VerifyArgs {
  std::string graph;
  std::vector<std::uint64_t> vertices;
  bool one_based = false;
};

Graph load(const std::string& path, bool one_based) {
  return read_edge_list(path, {.one_based = one_based, .strict = true});
}

std::string format_set(const VertexSet& s) {
  std::ostringstream o;
  o << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    o << (first ? "" : ",") << v;
    first = false;
  });
  o << '}';
  return o.str();
}

template <typename Fn>
void write_file(const std::string& path, Fn&& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw Error("failed writing '" + path + "'");
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "' (expected er, ws, ba)");
  if (a.density.has_value() == a.edges.has_value()) {
    throw UsageError("give exactly one of --density and --m");
  }
  if (a.density && !(*a.density > 0.0 && *a.density <= 1.0)) {
    throw UsageError("--density must be in (0, 1]");
  }
  GenSpec spec;
  spec.family = *family;
  spec.n = a.n;
  spec.m_target = a.density ? edges_for_density(a.n, *a.density) : *a.edges;
  spec.seed = a.seed;
  spec.ws_rewire_prob = a.rewire;
  try {
    validate(spec);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  const Graph g = generate(spec);
  if (a.output.empty()) {
    write_edge_list(out, g);
  } else {
    write_file(a.output, [&](std::ostream& f) { write_edge_list(f, g); });
  }
  (a.output.empty() ? err : out) << "n=" << g.num_vertices() << " m=" << g.num_edges()
                                 << " seed=" << spec.seed << '\n';
  return kExitOk;
}

void print_result(std::ostream& out, const GeodeticResult& r, bool show_set) {
  std::string value = std::to_string(r.value);
  std::string status;
  if (r.algorithm == Algorithm::Exact || r.algorithm == Algorithm::BruteForce) {
    if (!r.optimal) value = "<=" + value;
    status = r.optimal ? "optimal" : "budget-exhausted";
  } else {
    status = "upper-bound";
  }
  if (r.verified) status += ",verified";
  out << std::left << std::setw(16) << to_string(r.algorithm) << std::setw(8) << value
      << std::right << std::fixed << std::setprecision(6) << r.elapsed_seconds << "  "
      << status;
  if (show_set) out << "  " << format_set(r.set);
  out << '\n';
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  static const std::vector<std::string> kKnown{
      "exact", "brute", "greedy", "greedy-addone", "locally-greedy", "bounds", "all"};
  if (std::find(kKnown.begin(), kKnown.end(), a.algorithm) == kKnown.end()) {
    throw UsageError("unknown algorithm '" + a.algorithm + "'");
  }
  SearchLimits limits;
  limits.time_budget_seconds = a.time_limit;
  limits.node_budget = a.node_limit;
  try {
    validate(limits);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }

  const Graph g = load(a.graph, a.one_based);
  const bool all = a.algorithm == "all";
  auto wanted = [&](std::string_view name) { return all || a.algorithm == name; };

  out << "graph: n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  out << std::left << std::setw(16) << "algorithm" << std::setw(8) << "value"
      << "time_s    status\n";
  if (wanted("exact")) print_result(out, exact_geodetic(g, limits), a.show_sets);
  if (a.algorithm == "brute") print_result(out, brute_force_geodetic(g), a.show_sets);
  if (wanted("greedy")) print_result(out, greedy_geodetic(g, false), a.show_sets);
  if (wanted("greedy-addone")) print_result(out, greedy_geodetic(g, true), a.show_sets);
  if (wanted("locally-greedy")) print_result(out, locally_greedy_geodetic(g), a.show_sets);
  if (wanted("bounds")) {
    out << "bounds: trivial=" << trivial_bound(g)
        << " diameter=" << diameter_bound(all_pairs_distances(g)) << '\n';
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchOptions options;
  if (a.scheme == "standard") {
    options.scheme = GridScheme::Standard;
  } else if (a.scheme == "large") {
    options.scheme = GridScheme::Large;
  } else {
    throw UsageError("unknown scheme '" + a.scheme + "' (expected standard, large)");
  }
  options.families.clear();
  for (const auto& name : a.families) {
    const auto family = parse_family(name);
    if (!family) throw UsageError("unknown family '" + name + "'");
    options.families.push_back(*family);
  }
  if (a.exact_time_limit && !(*a.exact_time_limit > 0.0)) {
    throw UsageError("--exact-time-limit must be positive");
  }
  options.seed_base = a.seed;
  options.max_n = a.max_n;
  options.exact_max_n = a.exact_max_n;
  options.exact_time_limit = a.exact_time_limit;
  options.jobs = std::max(1U, a.jobs);

  // Fail on an unwritable path before spending time on the grid.
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::binary);
    if (!file) throw Error("cannot open '" + a.output + "' for writing");
  }
  const auto records = run_bench(options);
  std::ostream& sink = a.output.empty() ? out : file;
  if (a.pretty) {
    write_pretty(sink, records, !a.no_times);
  } else {
    write_csv(sink, records, !a.no_times);
  }
  sink.flush();
  if (!sink) throw Error("failed writing benchmark output");
  if (!a.output.empty()) out << "wrote " << records.size() << " rows to " << a.output << '\n';
  return kExitOk;
}

int cmd_export_ilp(const ExportArgs& a, std::ostream& out) {
  const Graph g = load(a.graph, a.one_based);
  const std::string name = std::filesystem::path(a.graph).stem().string();
  const std::string path = a.output.empty() ? name + ".lp" : a.output;
  const IlpModel model = build_ilp_model(g);
  write_file(path, [&](std::ostream& f) { f << write_lp(model, name); });
  out << "wrote " << path << ": " << model.variables.size() << " binaries, "
      << model.constraints.size() << " constraints\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = load(a.graph, a.one_based);
  const std::size_t n = g.num_vertices();
  VertexSet s(n);
  for (auto v : a.vertices) {
    if (v >= n) {
      throw UsageError("vertex " + std::to_string(v) + " out of range (n=" +
                       std::to_string(n) + ")");
    }
    s.insert(static_cast<Vertex>(v));
  }
  const auto table = interval_table(all_pairs_distances(g));
  const auto cover = closure(table, s);
  out << "set: " << format_set(s) << '\n';
  out << "closure: " << cover.size() << '/' << n << '\n';
  out << (cover.size() == n ? "geodetic\n" : "not geodetic\n");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodetic number: exact search, greedy upper bounds and benchmarks", "geodetic"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random graph as an edge list");
  generate_cmd->add_option("--family", gen.family, "er, ws or ba")->required();
  generate_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  auto* density_opt =
      generate_cmd->add_option("--density", gen.density, "Fraction of n(n-1)/2 edges, in (0, 1]");
  generate_cmd->add_option("--m", gen.edges, "Exact edge count")->excludes(density_opt);
  generate_cmd->add_option("--seed", gen.seed, "RNG seed");
  generate_cmd->add_option("--rewire", gen.rewire, "WS rewiring probability")
      ->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the geodetic number or bounds for a graph");
  solve_cmd->add_option("graph", solve.graph, "Edge-list file")->required();
  solve_cmd->add_option("-a,--algorithm", solve.algorithm,
                        "exact, brute, greedy, greedy-addone, locally-greedy, bounds or all");
  solve_cmd->add_flag("--one-based", solve.one_based, "Ids in the file start at 1");
  solve_cmd->add_option("--time-limit", solve.time_limit, "Exact search budget in seconds");
  solve_cmd->add_option("--node-limit", solve.node_limit, "Exact search budget in subsets");
  solve_cmd->add_flag("--show-sets", solve.show_sets, "Print the vertex sets found");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the random-graph benchmark grid");
  bench_cmd->add_option("--scheme", bench.scheme, "standard or large");
  bench_cmd->add_option("--families", bench.families, "Comma-separated subset of er,ws,ba")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Seed of the first cell");
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default: stdout)");
  bench_cmd->add_option("--max-n", bench.max_n, "Drop cells with more vertices (0: keep all)");
  bench_cmd->add_option("--exact-max-n", bench.exact_max_n, "Largest n given to exact search");
  bench_cmd->add_option("--exact-time-limit", bench.exact_time_limit,
                        "Per-instance exact budget in seconds");
  bench_cmd->add_option("-j,--jobs", bench.jobs, "Cells evaluated concurrently");
  bench_cmd->add_flag("--pretty", bench.pretty, "Aligned table instead of CSV");
  bench_cmd->add_flag("--no-times", bench.no_times, "Leave time columns empty");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export-ilp", "Write the 0-1 model in LP format");
  export_cmd->add_option("graph", exp.graph, "Edge-list file")->required();
  export_cmd->add_option("-o,--output", exp.output, "LP file (default: <graph>.lp)");
  export_cmd->add_flag("--one-based", exp.one_based, "Ids in the file start at 1");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a vertex set is geodetic");
  verify_cmd->add_option("graph", verify.graph, "Edge-list file")->required();
  verify_cmd->add_option("vertices", verify.vertices, "0-based vertex ids (commas or spaces)")
      ->delimiter(',')
      ->required();
  verify_cmd->add_flag("--one-based", verify.one_based, "Ids in the file start at 1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*export_cmd) return cmd_export_ilp(exp, out);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlgorithmError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace geodetic::cli

#include "geodetic/cli/bench.hpp"

#include <atomic>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "geodetic/errors.hpp"
#include "geodetic/exact.hpp"
#include "geodetic/greedy.hpp"
#include "geodetic/locally_greedy.hpp"

namespace geodetic::cli {
namespace {

AlgorithmOutcome outcome(const GeodeticResult& r, bool flag) {
  return {r.value, r.elapsed_seconds, flag};
}

std::string format_time(double seconds) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << seconds;
  return s.str();
}

std::vector<std::string> row_fields(const BenchRecord& r, bool include_times) {
  auto time = [&](double t) { return include_times ? format_time(t) : std::string(); };
  std::vector<std::string> f{std::string(to_string(r.family)), std::to_string(r.n),
                             std::to_string(r.m), std::to_string(r.seed)};
  if (r.exact) {
    f.push_back(std::to_string(r.exact->value));
    f.push_back(r.exact->flag ? "1" : "0");
    f.push_back(time(r.exact->seconds));
  } else {
    f.insert(f.end(), {"", "", ""});
  }
  for (const auto* o : {&r.greedy, &r.addone, &r.local}) {
    f.push_back(std::to_string(o->value));
    f.push_back(time(o->seconds));
  }
  return f;
}

}  // namespace

std::vector<GenSpec> bench_cells(const BenchOptions& options) {
  std::vector<GenSpec> cells;
  for (Family family : options.families) {
    for (const GenSpec& spec : benchmark_grid(options.scheme, family, options.seed_base)) {
      if (options.max_n == 0 || spec.n <= options.max_n) cells.push_back(spec);
    }
  }
  return cells;
}

BenchRecord run_cell(const GenSpec& spec, const BenchOptions& options) {
  const Graph g = generate(spec);
  BenchRecord record;
  record.family = spec.family;
  record.n = g.num_vertices();
  record.m = g.num_edges();
  record.seed = spec.seed;

  const auto greedy = greedy_geodetic(g, false);
  const auto addone = greedy_geodetic(g, true);
  const auto local = locally_greedy_geodetic(g);
  record.greedy = outcome(greedy, greedy.verified);
  record.addone = outcome(addone, addone.verified);
  record.local = outcome(local, local.verified);

  if (g.num_vertices() <= options.exact_max_n) {
    SearchLimits limits;
    limits.time_budget_seconds = options.exact_time_limit;
    const auto exact = exact_geodetic(g, limits);
    record.exact = outcome(exact, exact.optimal);
    if (exact.optimal) {
      for (const auto* h : {&record.greedy, &record.addone, &record.local}) {
        if (h->value < exact.value) {
          throw AlgorithmError("heuristic value " + std::to_string(h->value) +
                               " below proven optimum " + std::to_string(exact.value));
        }
      }
    }
  }
  return record;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  const auto cells = bench_cells(options);
  std::vector<BenchRecord> records(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        records[i] = run_cell(cells[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs,
                                                        static_cast<unsigned>(cells.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records, bool include_times) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    const auto fields = row_fields(r, include_times);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << fields[i];
    }
    out << '\n';
  }
}

void write_pretty(std::ostream& out, std::span<const BenchRecord> records, bool include_times) {
  std::vector<std::string> header;
  {
    std::string h = kCsvHeader;
    std::size_t start = 0;
    for (std::size_t pos = h.find(','); ; pos = h.find(',', start)) {
      header.push_back(h.substr(start, pos == std::string::npos ? pos : pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : records) {
    auto fields = row_fields(r, include_times);
    if (!r.exact) fields[4] = "-";
    rows.push_back(std::move(fields));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
}

}  // namespace geodetic::cli

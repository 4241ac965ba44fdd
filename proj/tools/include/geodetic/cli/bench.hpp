#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "geodetic/generators.hpp"

namespace geodetic::cli {

struct AlgorithmOutcome {
  std::size_t value = 0;
  double seconds = 0.0;
  /// exact: proven optimal. Heuristics: set verified geodetic.
  bool flag = false;
};

/// One row of the benchmark table.
struct BenchRecord {
  Family family = Family::ER;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::optional<AlgorithmOutcome> exact;  // absent when skipped
  AlgorithmOutcome greedy;
  AlgorithmOutcome addone;
  AlgorithmOutcome local;
};

struct BenchOptions {
  GridScheme scheme = GridScheme::Standard;
  std::vector<Family> families{Family::ER, Family::WS, Family::BA};
  std::uint64_t seed_base = 1;
  /// Cells with more vertices are dropped entirely (0 keeps all).
  std::size_t max_n = 0;
  /// Exact search only runs on cells with at most this many vertices.
  std::size_t exact_max_n = 30;
  std::optional<double> exact_time_limit;
  unsigned jobs = 1;
};

/// Specs of every cell that run_bench would evaluate, in output order.
std::vector<GenSpec> bench_cells(const BenchOptions& options);

/// Evaluates one cell. Throws AlgorithmError if a heuristic beats a proven
/// optimum.
BenchRecord run_cell(const GenSpec& spec, const BenchOptions& options);

/// All cells, family-major then grid order, regardless of `jobs`.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

inline constexpr const char* kCsvHeader =
    "family,n,m,seed,exact_value,exact_opt,exact_time,greedy_value,greedy_time,"
    "addone_value,addone_time,local_value,local_time";

/// With include_times = false every *_time field is left empty, which makes
/// the output a pure function of the options.
void write_csv(std::ostream& out, std::span<const BenchRecord> records,
               bool include_times = true);
void write_pretty(std::ostream& out, std::span<const BenchRecord> records,
                  bool include_times = true);

}  // namespace geodetic::cli

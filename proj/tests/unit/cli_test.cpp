#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "geodetic/cli/bench.hpp"
#include "geodetic/cli/commands.hpp"
#include "geodetic/edge_list.hpp"
#include "geodetic/errors.hpp"

using namespace geodetic;
using namespace geodetic::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::current_path() / "cli_test_files";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_graph(const std::string& name, const Graph& g) {
  const auto path = scratch(name);
  std::ofstream(path) << to_edge_list(g);
  return path;
}

}  // namespace

TEST_CASE("generate") {
  const auto path = scratch("er10.el");
  const auto r = run({"generate", "--family", "er", "--n", "10", "--density", "0.2", "--seed",
                      "1", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=10 m=9 seed=1") != std::string::npos);
  const Graph g = read_edge_list(path);
  CHECK(g.num_edges() == 9);
  CHECK(is_connected(g));

  const auto again = scratch("er10b.el");
  run({"generate", "--family", "er", "--n", "10", "--density", "0.2", "--seed", "1", "-o",
       again.string()});
  CHECK(slurp(path) == slurp(again));

  CHECK(run({"generate", "--family", "er", "--n", "10", "--density", "0"}).code == 1);
  CHECK(run({"generate", "--family", "xx", "--n", "10", "--m", "12"}).code == 1);
  CHECK(run({"generate", "--family", "ws", "--n", "10"}).code == 1);
  CHECK(run({"generate", "--family", "ba", "--n", "10", "--m", "3"}).code == 1);
  CHECK(run({"generate", "--family", "ba", "--n", "10", "--m", "20", "--density", "0.5"}).code == 1);

  const auto stdout_run = run({"generate", "--family", "ba", "--n", "8", "--m", "12", "--seed", "4"});
  CHECK(stdout_run.code == 0);
  CHECK(parse_edge_list(stdout_run.out).num_edges() == 12);
}

TEST_CASE("solve") {
  const auto p4 = write_graph("p4.el", path_graph(4));
  const auto r = run({"solve", p4.string()});
  CHECK(r.code == 0);
  for (const char* line : {"exact           2 ", "greedy          2 ", "greedy-addone   2 ",
                           "locally-greedy  2 ", "bounds: trivial=4 diameter=2"}) {
    CAPTURE(line);
    CHECK(r.out.find(line) != std::string::npos);
  }

  const auto k5 = write_graph("k5.el", complete_graph(5));
  const auto rk = run({"solve", k5.string(), "-a", "all"});
  for (const char* line : {"exact           5 ", "greedy          5 ", "greedy-addone   5 ",
                           "locally-greedy  5 "}) {
    CHECK(rk.out.find(line) != std::string::npos);
  }

  const auto c5 = write_graph("c5.el", cycle_graph(5));
  const auto rc = run({"solve", c5.string(), "--algorithm", "exact"});
  CHECK(rc.out.find("exact           3 ") != std::string::npos);
  CHECK(rc.out.find("greedy") == std::string::npos);
  CHECK(run({"solve", c5.string(), "-a", "brute"}).out.find("brute           3 ") !=
        std::string::npos);

  CHECK(run({"solve", c5.string(), "-a", "nope"}).code == 1);
  CHECK(run({"solve", scratch("missing.el").string()}).code == 2);
  const auto split = scratch("split.el");
  std::ofstream(split) << "0 1\n2 3\n";
  CHECK(run({"solve", split.string()}).code == 2);
  const auto bad = scratch("bad.el");
  std::ofstream(bad) << "0 1\nfoo bar\n";
  const auto rb = run({"solve", bad.string()});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("line 2") != std::string::npos);
}

TEST_CASE("solve reports an exhausted exact budget") {
  const auto g = write_graph("ws40.el", random_graph(Family::WS, 40, 0.08, 3));
  const auto r = run({"solve", g.string(), "-a", "exact", "--node-limit", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<=") != std::string::npos);
  CHECK(r.out.find("budget-exhausted") != std::string::npos);
}

TEST_CASE("verify") {
  const auto p4 = write_graph("p4v.el", path_graph(4));
  const auto yes = run({"verify", p4.string(), "0,3"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("closure: 4/4\ngeodetic") != std::string::npos);
  const auto no = run({"verify", p4.string(), "0", "2"});
  CHECK(no.out.find("closure: 3/4\nnot geodetic") != std::string::npos);
  const auto c5 = write_graph("c5v.el", cycle_graph(5));
  CHECK(run({"verify", c5.string(), "0,2,3"}).out.find("\ngeodetic") != std::string::npos);
  CHECK(run({"verify", p4.string(), "9"}).code == 1);
}

TEST_CASE("export-ilp") {
  const auto k2 = write_graph("k2.el", complete_graph(2));
  const auto out = scratch("k2.lp");
  const auto r = run({"export-ilp", k2.string(), "-o", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 binaries, 5 constraints") != std::string::npos);
  const auto p3 = write_graph("p3.el", path_graph(3));
  CHECK(run({"export-ilp", p3.string(), "-o", scratch("p3.lp").string()}).out.find(
            "12 constraints") != std::string::npos);
  const std::string first = slurp(scratch("p3.lp"));
  run({"export-ilp", p3.string(), "-o", scratch("p3.lp").string()});
  CHECK(slurp(scratch("p3.lp")) == first);
  CHECK(first.rfind("\\ Problem name: p3\n", 0) == 0);
  CHECK(run({"export-ilp", p3.string(), "-o", "/nonexistent-dir/x.lp"}).code == 2);
}

TEST_CASE("bench") {
  const auto csv = scratch("bench.csv");
  const auto r = run({"bench", "--scheme", "standard", "--families", "er", "--max-n", "30",
                      "--seed", "5", "-o", csv.string()});
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == cli::kCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind("ER,", 0) == 0);
  }
  CHECK(rows == 12);

  CHECK(run({"bench", "--scheme", "huge"}).code == 1);
  CHECK(run({"bench", "--families", "er,xx"}).code == 1);
  CHECK(run({"bench", "--families", "er", "--max-n", "10", "-o", "/nonexistent-dir/b.csv"}).code == 2);

  const auto pretty = run({"bench", "--families", "ba", "--max-n", "10", "--pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("exact_value") != std::string::npos);
}

TEST_CASE("bench records") {
  cli::BenchOptions options;
  options.families = {Family::ER, Family::WS, Family::BA};
  options.max_n = 20;
  options.exact_max_n = 10;
  const auto records = cli::run_bench(options);
  REQUIRE(records.size() == 24);
  for (const auto& rec : records) {
    CHECK(rec.greedy.flag);
    CHECK(rec.addone.flag);
    CHECK(rec.local.flag);
    CHECK(rec.exact.has_value() == (rec.n <= 10));
    if (rec.exact && rec.exact->flag) {
      CHECK(rec.exact->value <= rec.greedy.value);
      CHECK(rec.exact->value <= rec.addone.value);
      CHECK(rec.exact->value <= rec.local.value);
    }
  }
  options.jobs = 3;
  const auto parallel = cli::run_bench(options);
  std::ostringstream a, b;
  cli::write_csv(a, records, false);
  cli::write_csv(b, parallel, false);
  CHECK(a.str() == b.str());

  const auto large = cli::bench_cells({.scheme = GridScheme::Large, .families = {Family::WS}});
  CHECK(large.size() == 9);
}

TEST_CASE("help and unknown subcommands") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}

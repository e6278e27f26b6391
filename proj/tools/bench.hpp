#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace plse::cli {

struct BenchOptions {
  std::filesystem::path dir;
  std::vector<std::string> algs;
  double time_limit_s = 30.0;
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path csv;
  std::vector<double> checkpoints_s{5.0, 10.0, 30.0};
  unsigned threads = 1;
};

/// Worker count: hardware concurrency, capped by PLSE_THREADS if set.
unsigned default_bench_threads();

/// Runs every (instance, alg, seed) combination over the *.pls files in
/// opts.dir and writes one CSV row per run, then one mean row per
/// (n, r, alg). Failed runs get a row with opt = "error" and the run
/// continues. A summary table goes to `log`. Returns the number of failed runs.
int run_bench(const BenchOptions& opts, std::ostream& log);

}  // namespace plse::cli

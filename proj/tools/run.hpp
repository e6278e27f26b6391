#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "plse/ils.hpp"
#include "plse/pls.hpp"

namespace plse::cli {

struct Algorithm {
  std::string name;  // as given on the command line, e.g. "tr-ils"
  LsLevel level;
  bool iterated;
};

/// ls1 ls2 ls3 tr-ls ils1 ils2 ils3 tr-ils
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct RunRecord {
  std::string instance;
  int n = 0;
  double r = 0.0;
  std::string scheme;
  std::string alg;
  std::uint64_t seed = 0;
  double time_limit_s = 0.0;
  std::size_t given = 0;
  std::size_t init = 0;
  std::size_t final_size = 0;
  std::uint64_t iters = 0;
  double elapsed_ms = 0.0;
  bool optimal = false;
  std::size_t first_ls_improvement = 0;
  double mean_ls_ms = 0.0;
  std::vector<std::pair<double, std::size_t>> series;
};

struct SolveOutput {
  RunRecord record;
  PlsInstance merged;  // L u S
};

/// Scheme label from the file name ("qc..." / "qwh..."), else "unknown".
std::string infer_scheme(const std::filesystem::path& path);

/// Runs one algorithm on the instance. Pure local search runs one greedy
/// start plus one descent and ignores the time limit. The merged grid is
/// validated before it is returned; a failure there throws std::logic_error.
SolveOutput solve(const PlsInstance& instance, const Algorithm& alg, double time_limit_s,
                  std::uint64_t seed);

/// Flat "key = value" lines followed by a "[series]" section of
/// "elapsed_ms best_size" pairs.
void write_stats(std::ostream& os, const RunRecord& record);

}  // namespace plse::cli

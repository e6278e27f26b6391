#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "plse/errors.hpp"
#include "plse/generate.hpp"
#include "plse/pls_io.hpp"
#include "run.hpp"

namespace {

using namespace plse;

int cmd_gen(const std::string& scheme_name_arg, int n, double r, std::uint64_t seed,
            const std::string& out) {
  const GenScheme scheme{parse_scheme(scheme_name_arg), r, seed};
  const PlsInstance instance = generate(n, scheme);
  write_instance_file(out, instance);
  std::cout << instance.size() << '\n';
  return 0;
}

int cmd_solve(const std::string& alg_name, double time_limit, std::uint64_t seed,
              const std::string& input, const std::string& out, const std::string& stats_path) {
  const auto alg = cli::parse_algorithm(alg_name);
  if (!alg) throw InputError("unknown algorithm '" + alg_name + "'");
  const PlsInstance instance = read_instance_file(input);
  auto result = cli::solve(instance, *alg, time_limit, seed);
  result.record.instance = input;
  result.record.scheme = cli::infer_scheme(input);

  write_instance_file(out, result.merged);
  if (stats_path.empty() || stats_path == "-") {
    cli::write_stats(std::cout, result.record);
  } else {
    std::ofstream os(stats_path, std::ios::trunc);
    if (!os) throw InputError("cannot write " + stats_path);
    cli::write_stats(os, result.record);
  }
  return 0;
}

// Reports the first problem found, in the order: size mismatch, missing
// given cell, repeated symbol in a row, repeated symbol in a column.
int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const PlsInstance instance = read_instance_file(instance_path);
  const Grid sol = parse_grid(read_text_file(solution_path));
  const int n = instance.n();
  if (sol.n != n) {
    std::cout << "invalid: solution has order " << sol.n << ", instance has order " << n << '\n';
    return 1;
  }
  for (const Triple& t : instance.given()) {
    if (sol.at(t.row, t.col) != t.sym + 1) {
      std::cout << "invalid: cell (" << t.row + 1 << "," << t.col + 1 << ") must hold "
                << t.sym + 1 << ", found " << sol.at(t.row, t.col) << '\n';
      return 1;
    }
  }
  for (int row = 0; row < n; ++row) {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
    for (int col = 0; col < n; ++col) {
      const int v = sol.at(row, col);
      if (v == 0) continue;
      if (int& prev = seen[static_cast<std::size_t>(v)]; prev >= 0) {
        std::cout << "invalid: row " << row + 1 << " repeats symbol " << v << " in cells ("
                  << row + 1 << "," << prev + 1 << ") and (" << row + 1 << "," << col + 1
                  << ")\n";
        return 1;
      } else {
        prev = col;
      }
    }
  }
  for (int col = 0; col < n; ++col) {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
    for (int row = 0; row < n; ++row) {
      const int v = sol.at(row, col);
      if (v == 0) continue;
      if (int& prev = seen[static_cast<std::size_t>(v)]; prev >= 0) {
        std::cout << "invalid: column " << col + 1 << " repeats symbol " << v << " in cells ("
                  << prev + 1 << "," << col + 1 << ") and (" << row + 1 << "," << col + 1
                  << ")\n";
        return 1;
      } else {
        prev = row;
      }
    }
  }
  std::size_t filled = 0;
  for (int v : sol.cells) filled += v > 0;
  std::cout << "valid: " << filled << " of " << n * n << " cells filled ("
            << filled - instance.size() << " added)" << (filled == sol.cells.size() ? ", complete" : "")
            << '\n';
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Latin square extension solver"};
  app.require_subcommand(1);

  std::string scheme = "qc", gen_out;
  int gen_n = 0;
  double gen_r = 0.5;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--scheme", scheme, "qc or qwh")->check(CLI::IsMember({"qc", "qwh"}, CLI::ignore_case));
  gen->add_option("--n", gen_n, "Grid order")->required()->check(CLI::Range(2, 4096));
  gen->add_option("--r", gen_r, "Pre-assignment ratio")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("-o,--output", gen_out, "Output .pls file")->required();

  std::string alg = "tr-ils", input, solve_out, stats_path;
  double time_limit = 30.0;
  std::uint64_t solve_seed = 1;
  auto* solve = app.add_subcommand("solve", "Extend an instance");
  solve->add_option("--alg", alg, "ls1 ls2 ls3 tr-ls ils1 ils2 ils3 tr-ils");
  solve->add_option("--time-limit", time_limit, "Seconds (iterated variants)")->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_seed, "RNG seed");
  solve->add_option("input", input, "Instance .pls file")->required();
  solve->add_option("-o,--output", solve_out, "Merged grid output")->required();
  solve->add_option("--stats", stats_path, "Stats output (default: stdout)");

  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
  verify->add_option("instance", verify_instance)->required();
  verify->add_option("solution", verify_solution)->required();

  cli::BenchOptions bench_opts;
  std::string bench_algs = "ils1,tr-ils", bench_seeds = "1", bench_ckpts = "5,10,30";
  auto* bench = app.add_subcommand("bench", "Run algorithms over a directory of instances");
  bench->add_option("--dir", bench_opts.dir)->required();
  bench->add_option("--alg", bench_algs, "Comma-separated algorithm list");
  bench->add_option("--time-limit", bench_opts.time_limit_s)->check(CLI::PositiveNumber);
  bench->add_option("--seeds", bench_seeds, "Comma-separated seeds");
  bench->add_option("--csv", bench_opts.csv)->required();
  bench->add_option("--checkpoints", bench_ckpts, "Comma-separated seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(scheme, gen_n, gen_r, gen_seed, gen_out);
    if (*solve) return cmd_solve(alg, time_limit, solve_seed, input, solve_out, stats_path);
    if (*verify) return cmd_verify(verify_instance, verify_solution);
    if (*bench) {
      bench_opts.algs = split_list(bench_algs);
      for (const auto& a : bench_opts.algs) {
        if (!cli::parse_algorithm(a)) throw InputError("unknown algorithm '" + a + "'");
      }
      bench_opts.seeds.clear();
      for (const auto& s : split_list(bench_seeds)) bench_opts.seeds.push_back(std::stoull(s));
      bench_opts.checkpoints_s.clear();
      for (const auto& s : split_list(bench_ckpts)) bench_opts.checkpoints_s.push_back(std::stod(s));
      bench_opts.threads = cli::default_bench_threads();
      return cli::run_bench(bench_opts, std::cerr) == 0 ? 0 : 3;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "run.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "plse/mis_model.hpp"

namespace plse::cli {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  static constexpr struct {
    std::string_view name;
    LsLevel level;
    bool iterated;
  } kTable[] = {
      {"ls1", LsLevel::kL1, false},       {"ls2", LsLevel::kL2, false},
      {"ls3", LsLevel::kL3, false},       {"tr-ls", LsLevel::kTrellis, false},
      {"ils1", LsLevel::kL1, true},       {"ils2", LsLevel::kL2, true},
      {"ils3", LsLevel::kL3, true},       {"tr-ils", LsLevel::kTrellis, true},
  };
  for (const auto& e : kTable) {
    if (e.name == name) return Algorithm{std::string(e.name), e.level, e.iterated};
  }
  return std::nullopt;
}

std::string infer_scheme(const std::filesystem::path& path) {
  std::string stem = path.stem().string();
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (stem.starts_with("qwh")) return "qwh";
  if (stem.starts_with("qc")) return "qc";
  return "unknown";
}

SolveOutput solve(const PlsInstance& instance, const Algorithm& alg, double time_limit_s,
                  std::uint64_t seed) {
  const MisInstance mis(instance);

  IlsConfig config;
  config.level = alg.level;
  config.seed = seed;
  if (alg.iterated) {
    config.time_limit_s = time_limit_s;
  } else {
    config.time_limit_s = std::numeric_limits<double>::infinity();
    config.max_iterations = 1;
  }
  const IlsResult result = run_ils(mis, config);

  std::vector<Triple> merged = instance.given();
  const auto added = mis.triples_of(result.best);
  if (!validate_extension(instance, added)) {
    throw std::logic_error("solver produced an invalid extension");
  }
  merged.insert(merged.end(), added.begin(), added.end());

  RunRecord rec;
  rec.n = instance.n();
  rec.r = static_cast<double>(instance.size()) /
          (static_cast<double>(instance.n()) * static_cast<double>(instance.n()));
  rec.alg = alg.name;
  rec.seed = seed;
  rec.time_limit_s = alg.iterated ? time_limit_s : 0.0;
  rec.given = instance.size();
  rec.init = result.stats.initial_size;
  rec.final_size = result.stats.best_size;
  rec.iters = result.stats.iterations;
  rec.elapsed_ms = result.stats.elapsed_ms;
  rec.optimal = result.stats.best_size == instance.empty_cells();
  rec.first_ls_improvement = result.stats.first_ls_improvement;
  rec.mean_ls_ms = result.stats.mean_ls_ms;
  rec.series = result.stats.series;
  return {std::move(rec), PlsInstance(instance.n(), std::move(merged))};
}

void write_stats(std::ostream& os, const RunRecord& rec) {
  os << "instance = " << rec.instance << '\n'
     << "n = " << rec.n << '\n'
     << "r = " << rec.r << '\n'
     << "scheme = " << rec.scheme << '\n'
     << "alg = " << rec.alg << '\n'
     << "seed = " << rec.seed << '\n'
     << "time_limit_s = " << rec.time_limit_s << '\n'
     << "given = " << rec.given << '\n'
     << "init = " << rec.init << '\n'
     << "final = " << rec.final_size << '\n'
     << "iters = " << rec.iters << '\n'
     << "first_ls_improvement = " << rec.first_ls_improvement << '\n'
     << "mean_ls_ms = " << rec.mean_ls_ms << '\n'
     << "elapsed_ms = " << rec.elapsed_ms << '\n'
     << "opt = " << (rec.optimal ? "true" : "false") << '\n'
     << "[series]\n";
  for (const auto& [ms, size] : rec.series) os << ms << ' ' << size << '\n';
}

}  // namespace plse::cli

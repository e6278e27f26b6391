#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "plse/errors.hpp"
#include "plse/pls_io.hpp"
#include "run.hpp"

namespace plse::cli {
namespace {

struct Job {
  std::filesystem::path file;
  std::string alg;
  std::uint64_t seed;
};

struct Row {
  std::optional<RunRecord> record;
  std::vector<std::size_t> checkpoints;
  std::string error;
};

std::string checkpoint_label(double s) {
  std::ostringstream os;
  os << "ckpt_" << s << 's';
  return os.str();
}

std::string r_key(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

Row run_job(const Job& job, const BenchOptions& opts) {
  Row row;
  try {
    const auto alg = parse_algorithm(job.alg);
    if (!alg) throw InputError("unknown algorithm " + job.alg);
    const PlsInstance instance = read_instance_file(job.file);
    auto out = solve(instance, *alg, opts.time_limit_s, job.seed);
    out.record.instance = job.file.filename().string();
    out.record.scheme = infer_scheme(job.file);

    IlsStats stats;
    stats.initial_size = out.record.init;
    stats.series = out.record.series;
    for (double s : opts.checkpoints_s) row.checkpoints.push_back(stats.best_at(s * 1000.0));
    row.record = std::move(out.record);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

unsigned default_bench_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PLSE_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

int run_bench(const BenchOptions& opts, std::ostream& log) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(opts.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pls") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no .pls files in " + opts.dir.string());

  std::vector<Job> jobs;
  for (const auto& f : files) {
    for (const auto& a : opts.algs) {
      for (auto s : opts.seeds) jobs.push_back({f, a, s});
    }
  }

  std::vector<Row> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = run_job(jobs[i], opts);
      if (!rows[i].error.empty()) {
        std::lock_guard lock(log_mutex);
        log << "error: " << jobs[i].file.filename().string() << ' ' << jobs[i].alg << " seed "
            << jobs[i].seed << ": " << rows[i].error << '\n';
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::ofstream csv(opts.csv, std::ios::trunc);
  if (!csv) throw InputError("cannot write " + opts.csv.string());
  csv << "instance,n,r,scheme,alg,seed,given,init,final,iters,elapsed_ms,opt";
  for (double s : opts.checkpoints_s) csv << ',' << checkpoint_label(s);
  csv << '\n';

  struct Agg {
    std::size_t runs = 0, optimal = 0;
    double given = 0, init = 0, final_size = 0, iters = 0, elapsed = 0;
    std::vector<double> ckpt;
    std::string scheme;
  };
  std::map<std::tuple<int, std::string, std::string>, Agg> groups;

  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (!row.record) {
      ++failures;
      csv << jobs[i].file.filename().string() << ",,,," << jobs[i].alg << ',' << jobs[i].seed
          << ",,,,,,error";
      for (std::size_t k = 0; k < opts.checkpoints_s.size(); ++k) csv << ',';
      csv << '\n';
      continue;
    }
    const RunRecord& rec = *row.record;
    csv << rec.instance << ',' << rec.n << ',' << r_key(rec.r) << ',' << rec.scheme << ','
        << rec.alg << ',' << rec.seed << ',' << rec.given << ',' << rec.init << ','
        << rec.final_size << ',' << rec.iters << ',' << std::fixed << std::setprecision(1)
        << rec.elapsed_ms << std::defaultfloat << ',' << (rec.optimal ? 1 : 0);
    for (auto c : row.checkpoints) csv << ',' << c;
    csv << '\n';

    Agg& g = groups[{rec.n, r_key(rec.r), rec.alg}];
    if (g.ckpt.empty()) g.ckpt.assign(opts.checkpoints_s.size(), 0.0);
    g.scheme = g.runs == 0 || g.scheme == rec.scheme ? rec.scheme : "mixed";
    ++g.runs;
    g.optimal += rec.optimal;
    g.given += static_cast<double>(rec.given);
    g.init += static_cast<double>(rec.init);
    g.final_size += static_cast<double>(rec.final_size);
    g.iters += static_cast<double>(rec.iters);
    g.elapsed += rec.elapsed_ms;
    for (std::size_t k = 0; k < row.checkpoints.size(); ++k) {
      g.ckpt[k] += static_cast<double>(row.checkpoints[k]);
    }
  }

  // Mean rows: instance "mean", seed holds the run count, opt the fraction
  // of runs that completed the square.
  log << std::left << std::setw(6) << "n" << std::setw(7) << "r" << std::setw(8) << "alg"
      << std::setw(7) << "runs" << std::setw(11) << "mean_init" << std::setw(12) << "mean_final"
      << "mean_improvement\n";
  csv << std::fixed << std::setprecision(2);
  for (const auto& [key, g] : groups) {
    const auto& [n, r, alg] = key;
    const double k = static_cast<double>(g.runs);
    csv << "mean," << n << ',' << r << ',' << g.scheme << ',' << alg << ',' << g.runs << ','
        << g.given / k << ',' << g.init / k << ',' << g.final_size / k << ',' << g.iters / k
        << ',' << g.elapsed / k << ',' << static_cast<double>(g.optimal) / k;
    for (double c : g.ckpt) csv << ',' << c / k;
    csv << '\n';
    log << std::setw(6) << n << std::setw(7) << r << std::setw(8) << alg << std::setw(7)
        << g.runs << std::setw(11) << std::fixed << std::setprecision(2) << g.init / k
        << std::setw(12) << g.final_size / k << (g.final_size - g.init) / k << '\n'
        << std::defaultfloat;
  }
  return failures;
}

}  // namespace plse::cli

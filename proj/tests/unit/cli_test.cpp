#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bench.hpp"
#include "plse/generate.hpp"
#include "plse/pls_io.hpp"
#include "run.hpp"
#include "test_states.hpp"

namespace plse {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PLSE_BINARY) + " " + args + " 2>&1";
  Result r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("plse_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(Algorithms, ParseNames) {
  for (const char* name : {"ls1", "ls2", "ls3", "tr-ls", "ils1", "ils2", "ils3", "tr-ils"}) {
    const auto alg = cli::parse_algorithm(name);
    ASSERT_TRUE(alg) << name;
    EXPECT_EQ(alg->name, name);
  }
  EXPECT_EQ(cli::parse_algorithm("tr-ils")->level, LsLevel::kTrellis);
  EXPECT_FALSE(cli::parse_algorithm("ls1")->iterated);
  EXPECT_TRUE(cli::parse_algorithm("ils3")->iterated);
  EXPECT_FALSE(cli::parse_algorithm("ils4"));
  EXPECT_EQ(cli::infer_scheme("dir/QWH_30_0.5_1.pls"), "qwh");
  EXPECT_EQ(cli::infer_scheme("qc-1.pls"), "qc");
  EXPECT_EQ(cli::infer_scheme("x.pls"), "unknown");
}

TEST(Solve, TinyInstanceIsOptimal) {
  const PlsInstance inst(2, testing::t1s({{1, 1, 1}}));
  for (const char* name : {"ls1", "tr-ils"}) {
    const auto out = cli::solve(inst, *cli::parse_algorithm(name), 1.0, 1);
    EXPECT_TRUE(out.record.optimal);
    EXPECT_EQ(out.record.final_size, 3u);
    EXPECT_EQ(out.merged.size(), 4u);
  }
}

TEST(Solve, StatsDocumentLayout) {
  const auto out = cli::solve(generate_qc(10, 0.5, 1), *cli::parse_algorithm("ils2"), 0.2, 7);
  std::ostringstream os;
  cli::write_stats(os, out.record);
  const std::string doc = os.str();
  for (const char* key : {"n = 10", "alg = ils2", "seed = 7", "given = 50", "opt = ", "[series]"}) {
    EXPECT_NE(doc.find(key), std::string::npos) << key;
  }
  const auto series_at = doc.find("[series]\n");
  std::istringstream series(doc.substr(series_at + 9));
  std::size_t lines = 0;
  double ms;
  std::size_t size;
  while (series >> ms >> size) ++lines;
  EXPECT_EQ(lines, out.record.series.size());
}

TEST_F(CliTest, GenIsReproducible) {
  auto a = run("gen --scheme qc --n 12 --r 0.5 --seed 9 -o " + path("a.pls"));
  auto b = run("gen --scheme qc --n 12 --r 0.5 --seed 9 -o " + path("b.pls"));
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, "72\n");
  EXPECT_EQ(slurp(path("a.pls")), slurp(path("b.pls")));

  EXPECT_EQ(run("gen --scheme qc --n 40 --r 0.6 -o " + path("c.pls")).out, "960\n");

  ASSERT_EQ(run("gen --scheme qwh --n 3 --r 1 -o " + path("q.pls")).status, 0);
  EXPECT_EQ(read_instance_file(path("q.pls")).empty_cells(), 0u);
  EXPECT_NE(run("gen --scheme sudoku --n 3 --r 1 -o " + path("x.pls")).status, 0);
}

TEST_F(CliTest, SolveThenVerify) {
  ASSERT_EQ(run("gen --scheme qwh --n 8 --r 0.5 --seed 2 -o " + path("i.pls")).status, 0);
  const auto solved = run("solve --alg tr-ils --time-limit 2 --seed 3 " + path("i.pls") + " -o " +
                          path("s.pls") + " --stats " + path("st.txt"));
  ASSERT_EQ(solved.status, 0) << solved.out;
  EXPECT_NE(slurp(path("st.txt")).find("opt = true"), std::string::npos);
  const auto ok = run("verify " + path("i.pls") + " " + path("s.pls"));
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_NE(ok.out.find("complete"), std::string::npos);

  const auto ls = run("solve --alg ls2 " + path("i.pls") + " -o " + path("l.pls"));
  ASSERT_EQ(ls.status, 0) << ls.out;
  EXPECT_NE(ls.out.find("iters = 1\n"), std::string::npos);
  EXPECT_EQ(run("verify " + path("i.pls") + " " + path("l.pls")).status, 0);
}

TEST_F(CliTest, VerifyReportsViolations) {
  std::ofstream(path("i.pls")) << "3\n1 0 0\n0 0 0\n0 0 0\n";
  std::ofstream(path("missing.pls")) << "3\n0 2 3\n2 3 1\n3 1 2\n";
  std::ofstream(path("column.pls")) << "3\n1 2 3\n2 3 1\n3 2 0\n";
  std::ofstream(path("good.pls")) << "3\n1 2 3\n0 0 0\n0 0 0\n";

  const auto missing = run("verify " + path("i.pls") + " " + path("missing.pls"));
  EXPECT_NE(missing.status, 0);
  EXPECT_NE(missing.out.find("cell (1,1)"), std::string::npos) << missing.out;

  const auto column = run("verify " + path("i.pls") + " " + path("column.pls"));
  EXPECT_NE(column.status, 0);
  EXPECT_NE(column.out.find("column 2"), std::string::npos) << column.out;

  const auto good = run("verify " + path("i.pls") + " " + path("good.pls"));
  EXPECT_EQ(good.status, 0) << good.out;
  EXPECT_NE(good.out.find("3 of 9"), std::string::npos);
}

TEST_F(CliTest, SolveRejectsBadInput) {
  std::ofstream(path("bad.pls")) << "2\n1 1\n0 0\n";
  EXPECT_NE(run("solve --alg ls1 " + path("bad.pls") + " -o " + path("o.pls")).status, 0);
  EXPECT_NE(run("solve --alg ls1 " + path("none.pls") + " -o " + path("o.pls")).status, 0);
  EXPECT_FALSE(fs::exists(path("o.pls")));
}

TEST_F(CliTest, BenchWritesRowsAndMeans) {
  fs::create_directories(dir_ / "inst");
  write_instance_file(dir_ / "inst" / "qc_a.pls", generate_qc(10, 0.5, 1));
  write_instance_file(dir_ / "inst" / "qc_b.pls", generate_qc(10, 0.5, 2));
  std::ofstream(dir_ / "inst" / "qc_c.pls") << "broken\n";

  cli::BenchOptions opts;
  opts.dir = dir_ / "inst";
  opts.algs = {"ls1", "ils1"};
  opts.time_limit_s = 0.2;
  opts.seeds = {1};
  opts.csv = dir_ / "out.csv";
  opts.checkpoints_s = {0.05, 0.1, 0.2};
  opts.threads = 2;
  std::ostringstream log;
  EXPECT_EQ(cli::run_bench(opts, log), 2);  // the broken file, once per algorithm

  std::ifstream csv(opts.csv);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "instance,n,r,scheme,alg,seed,given,init,final,iters,elapsed_ms,opt,ckpt_0.05s,ckpt_0.1s,ckpt_0.2s");
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(csv, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  ASSERT_EQ(rows.size(), 6u + 2u);  // 4 runs + 2 failures + 2 means
  int ok = 0, failed = 0, means = 0;
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 15u);
    if (r[0] == "mean") {
      ++means;
      EXPECT_EQ(r[5], "2");
    } else if (r[11] == "error") {
      ++failed;
    } else {
      ++ok;
      EXPECT_EQ(r[3], "qc");
      const auto c1 = std::stoul(r[12]), c2 = std::stoul(r[13]), c3 = std::stoul(r[14]);
      EXPECT_LE(std::stoul(r[7]), c1);
      EXPECT_LE(c1, c2);
      EXPECT_LE(c2, c3);
      EXPECT_LE(c3, std::stoul(r[8]));
    }
  }
  EXPECT_EQ(ok, 4);
  EXPECT_EQ(failed, 2);
  EXPECT_EQ(means, 2);
  EXPECT_NE(log.str().find("mean_improvement"), std::string::npos);
}

}  // namespace
}  // namespace plse

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "plse/errors.hpp"
#include "plse/generate.hpp"
#include "plse/neighborhoods.hpp"
#include "plse/oracle.hpp"
#include "test_states.hpp"

namespace plse {
namespace {

using testing::t1s;

constexpr oracle::OracleBudget kBudget{1000, 5};

// Applies the move to a copy and checks it against a rebuild and the
// Latin-square check.
void expect_sound(const SolutionState& s, const Move& move) {
  ASSERT_GE(move.gain(), 1);
  SolutionState t = s;
  apply_move(t, move);
  EXPECT_EQ(t.size(), s.size() + static_cast<std::size_t>(move.gain()));
  EXPECT_TRUE(validate_extension(s.mis().instance(), t.solution_triples()));
  EXPECT_TRUE(equivalent(t, SolutionState::rebuild_from_scratch(s.mis(), t.solution_sorted())));
}

int differing_dim(const Triple& a, const Triple& b) {
  for (int d = 0; d < kDims; ++d) {
    if (a[d] != b[d]) return d;
  }
  return -1;
}

// Searches seeded random states for one whose move satisfies `pattern`.
struct Found {
  std::optional<SolutionState> state;
  Move move;
};

Found find_pattern(int n, LsLevel pre, const std::function<std::optional<Move>(const SolutionState&)>& search,
                   const std::function<bool(const SolutionState&, const Move&)>& pattern,
                   std::uint64_t seed, int max_trials, std::vector<std::unique_ptr<MisInstance>>& keep) {
  Rng rng(seed);
  for (int trial = 0; trial < max_trials; ++trial) {
    keep.push_back(std::make_unique<MisInstance>(testing::random_small_qc(n, rng, 0.0, 0.5)));
    const MisInstance& mis = *keep.back();
    SolutionState s = testing::random_local_optimum(mis, rng, pre);
    if (auto move = search(s); move && pattern(s, *move)) return {std::move(s), std::move(*move)};
  }
  return {};
}

TEST(Maximalize, TinyInstanceReachesEveryMaximalSize) {
  // Brute force over the 4 nodes: the maximal independent sets are
  // {(2,2,2)} (adjacent to the other three) and the three-node completion.
  const MisInstance mis(PlsInstance(2, t1s({{1, 1, 1}})));
  std::set<std::size_t> maximal_sizes;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<NodeId> set;
    for (NodeId v = 0; v < 4; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    bool independent = true, maximal = true;
    for (NodeId a : set) {
      for (NodeId b : set) independent &= a == b || !mis.adjacent(a, b);
    }
    for (NodeId w = 0; w < 4 && independent; ++w) {
      if (mask >> w & 1) continue;
      maximal &= std::any_of(set.begin(), set.end(), [&](NodeId a) { return mis.adjacent(a, w); });
    }
    if (independent && maximal) maximal_sizes.insert(set.size());
  }
  ASSERT_EQ(maximal_sizes, (std::set<std::size_t>{1, 3}));

  std::set<std::size_t> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    SolutionState s(mis);
    maximalize(s, rng);
    EXPECT_TRUE(s.is_maximal());
    seen.insert(s.size());
    const auto before = s.solution_sorted();
    maximalize(s, rng);
    EXPECT_EQ(s.solution_sorted(), before);
  }
  EXPECT_EQ(seen, maximal_sizes);
}

TEST(Maximalize, DeterministicPerSeed) {
  const MisInstance mis(generate_qc(12, 0.4, 3));
  Rng a(9), b(9);
  EXPECT_EQ(testing::random_maximal(mis, a).solution_sorted(),
            testing::random_maximal(mis, b).solution_sorted());
}

TEST(Searches, RejectViolatedPreconditions) {
  const MisInstance mis{PlsInstance(4)};
  const SolutionState empty(mis);
  EXPECT_THROW(search_swap1(empty), PreconditionError);
  EXPECT_THROW(search_swap2(empty), PreconditionError);
  EXPECT_THROW(search_swap3(empty), PreconditionError);
  EXPECT_THROW(search_trellis(empty), PreconditionError);

  // Maximal but not 1-maximal.
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const SolutionState s = testing::random_maximal(mis, rng);
    if (!search_swap1(s)) continue;
    EXPECT_THROW(search_swap2(s), PreconditionError);
    EXPECT_THROW(search_swap3(s), PreconditionError);
    return;
  }
  FAIL() << "no maximal, non-1-maximal state sampled";
}

TEST(Searches, FullSquareHasNoMove) {
  const MisInstance mis{PlsInstance(5)};
  std::vector<NodeId> ids;
  for (const Triple& t : random_latin_square(5, 2)) ids.push_back(mis.node_at(t));
  const auto s = SolutionState::rebuild_from_scratch(mis, ids);
  EXPECT_FALSE(search_swap1(s));
  EXPECT_FALSE(search_swap2(s));
  EXPECT_FALSE(search_swap3(s));
  EXPECT_FALSE(search_trellis(s));
}

TEST(Searches, EmptyGraphHasNoMove) {
  const MisInstance mis(PlsInstance(2, t1s({{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}})));
  SolutionState s(mis);
  Rng rng(1);
  EXPECT_EQ(local_search(s, LsLevel::kL3, rng).total_moves(), 0u);
  EXPECT_FALSE(search_swap3(s));
  EXPECT_FALSE(search_trellis(s));
}

// Existence of an improving move must agree with the definitional
// enumerators on random small states.
class OracleAgreement : public ::testing::TestWithParam<int> {};

TEST_P(OracleAgreement, Swap1) {
  const int n = GetParam();
  Rng rng(100 + static_cast<std::uint64_t>(n));
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const MisInstance mis(testing::random_small_qc(n, rng));
    const SolutionState s = testing::random_maximal(mis, rng);
    const auto fast = search_swap1(s);
    const auto slow = oracle::naive_swap_search(s, 1, kBudget);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << "trial " << trial;
    if (fast) {
      ++positives;
      expect_sound(s, *fast);
    }
  }
  if (n >= 4) {
    EXPECT_GT(positives, 0);
  }
}

TEST_P(OracleAgreement, Swap2) {
  const int n = GetParam();
  Rng rng(200 + static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 40; ++trial) {
    const MisInstance mis(testing::random_small_qc(n, rng));
    const SolutionState s = testing::random_local_optimum(mis, rng, LsLevel::kL1);
    const auto fast = search_swap2(s);
    ASSERT_EQ(fast.has_value(), oracle::naive_swap_search(s, 2, kBudget).has_value()) << "trial " << trial;
    if (fast) expect_sound(s, *fast);
  }
}

TEST_P(OracleAgreement, Swap3) {
  const int n = GetParam();
  Rng rng(300 + static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 40; ++trial) {
    const MisInstance mis(testing::random_small_qc(n, rng));
    const SolutionState s = testing::random_local_optimum(mis, rng, LsLevel::kL2);
    const auto fast = search_swap3(s);
    ASSERT_EQ(fast.has_value(), oracle::naive_swap_search(s, 3, kBudget).has_value()) << "trial " << trial;
    if (fast) expect_sound(s, *fast);
  }
}

TEST_P(OracleAgreement, Trellis) {
  const int n = GetParam();
  Rng rng(400 + static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 40; ++trial) {
    const MisInstance mis(testing::random_small_qc(n, rng));
    const SolutionState s = testing::random_maximal(mis, rng);
    const auto fast = search_trellis(s);
    ASSERT_EQ(fast.has_value(), oracle::naive_trellis_search(s, kBudget).has_value()) << "trial " << trial;
    if (fast) expect_sound(s, *fast);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, OracleAgreement, ::testing::Values(3, 4, 5));

TEST(Swap1, MoveTakesOneNodePerLine) {
  Rng rng(17);
  int seen = 0;
  for (int trial = 0; trial < 100 && seen < 10; ++trial) {
    const MisInstance mis(generate_qwh(4, 0.3, rng()));
    const SolutionState s = testing::random_maximal(mis, rng);
    const auto move = search_swap1(s);
    if (!move) continue;
    ++seen;
    ASSERT_EQ(move->removals.size(), 1u);
    const NodeId x = move->removals[0];
    EXPECT_EQ(move->insertions.size(), static_cast<std::size_t>(s.nu(x)));
    std::vector<int> dirs;
    for (NodeId w : move->insertions) {
      EXPECT_EQ(s.tightness(w), 1);
      dirs.push_back(differing_dim(mis.triple(w), mis.triple(x)));
    }
    std::sort(dirs.begin(), dirs.end());
    EXPECT_EQ(std::adjacent_find(dirs.begin(), dirs.end()), dirs.end());
    expect_sound(s, *move);
  }
  EXPECT_GE(seen, 10);
}

TEST(Swap2, OneTightNodesOnTheThirdLines) {
  std::vector<std::unique_ptr<MisInstance>> keep;
  // u 2-tight between x and y, plus 1-tight nodes on the lines of x and y
  // in the third direction.
  const auto found = find_pattern(
      5, LsLevel::kL1, search_swap2,
      [](const SolutionState& s, const Move& m) {
        if (m.removals.size() != 2 || m.insertions.size() != 3) return false;
        const MisInstance& mis = s.mis();
        const Triple& u = mis.triple(m.insertions[0]);
        const int a = differing_dim(u, mis.triple(m.removals[0]));
        const int b = differing_dim(u, mis.triple(m.removals[1]));
        const int c = third_dim(a, b);
        return differing_dim(mis.triple(m.insertions[1]), mis.triple(m.removals[0])) == c &&
               differing_dim(mis.triple(m.insertions[2]), mis.triple(m.removals[1])) == c;
      },
      7, 3000, keep);
  ASSERT_TRUE(found.state);
  EXPECT_EQ(found.state->tightness(found.move.insertions[0]), 2);
  EXPECT_TRUE(oracle::naive_swap_search(*found.state, 2, kBudget));
  expect_sound(*found.state, found.move);
}

TEST(Swap2, CornerNodeIsInserted) {
  std::vector<std::unique_ptr<MisInstance>> keep;
  const auto found = find_pattern(
      5, LsLevel::kL1, search_swap2,
      [](const SolutionState& s, const Move& m) {
        const MisInstance& mis = s.mis();
        const Triple& u = mis.triple(m.insertions[0]);
        const Triple& x = mis.triple(m.removals[0]);
        const Triple& y = mis.triple(m.removals[1]);
        const Triple corner{x.row + y.row - u.row, x.col + y.col - u.col, x.sym + y.sym - u.sym};
        return std::find(m.insertions.begin(), m.insertions.end(), mis.node_at(corner)) !=
               m.insertions.end();
      },
      11, 3000, keep);
  ASSERT_TRUE(found.state);
  const NodeId corner = found.move.insertions.back();
  EXPECT_EQ(found.state->tightness(corner), 2);
  EXPECT_EQ(found.move.insertions.size(), 3u);
  expect_sound(*found.state, found.move);
}

TEST(Swap2, TwoTightCandidateIsAlwaysTheCorner) {
  // For every 2-tight u with neighbors x, y, the only other node adjacent
  // to both x and y is x + y - u.
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const MisInstance mis(testing::random_small_qc(5, rng, 0.0, 0.3));
    const SolutionState s = testing::random_maximal(mis, rng);
    for (NodeId u : s.non_free_nodes()) {
      if (s.tightness(u) != 2) continue;
      std::vector<NodeId> xy;
      for (int d = 0; d < kDims; ++d) {
        if (s.solution_neighbor(u, d) != kNoNode) xy.push_back(s.solution_neighbor(u, d));
      }
      const Triple& x = mis.triple(xy[0]);
      const Triple& y = mis.triple(xy[1]);
      const Triple& tu = mis.triple(u);
      const Triple corner{x.row + y.row - tu.row, x.col + y.col - tu.col, x.sym + y.sym - tu.sym};
      for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
          for (int v = 0; v < 5; ++v) {
            const Triple p{r, c, v};
            if (p == tu || hamming_distance(p, x) != 1 || hamming_distance(p, y) != 1) continue;
            EXPECT_EQ(p, corner);
          }
        }
      }
    }
  }
}

TEST(Swap3, ThreeTightNodeCase) {
  std::vector<std::unique_ptr<MisInstance>> keep;
  const auto found = find_pattern(
      6, LsLevel::kL2, search_swap3,
      [](const SolutionState& s, const Move& m) { return s.tightness(m.insertions[0]) == 3; }, 13,
      3000, keep);
  ASSERT_TRUE(found.state);
  const NodeId u = found.move.insertions[0];
  for (NodeId x : found.move.removals) EXPECT_TRUE(found.state->mis().adjacent(u, x));
  expect_sound(*found.state, found.move);
}

TEST(Swap3, SharedNeighborCase) {
  std::vector<std::unique_ptr<MisInstance>> keep;
  const auto found = find_pattern(
      5, LsLevel::kL2, search_swap3,
      [](const SolutionState& s, const Move& m) {
        return s.tightness(m.insertions[0]) == 2 && s.tightness(m.insertions[1]) == 2;
      },
      17, 3000, keep);
  ASSERT_TRUE(found.state);
  const auto& s = *found.state;
  const NodeId x = found.move.removals[0];
  EXPECT_TRUE(s.mis().adjacent(found.move.insertions[0], x));
  EXPECT_TRUE(s.mis().adjacent(found.move.insertions[1], x));
  EXPECT_TRUE(oracle::naive_swap_search(s, 3, kBudget));
  expect_sound(s, found.move);
}

TEST(Trellis, FindsMovesBeyondSwap2) {
  std::vector<std::unique_ptr<MisInstance>> keep;
  const auto found = find_pattern(
      6, LsLevel::kL2, search_trellis,
      [](const SolutionState&, const Move& m) { return m.removals.size() >= 3; }, 19, 3000, keep);
  ASSERT_TRUE(found.state);
  const auto& s = *found.state;
  EXPECT_FALSE(search_swap2(s));
  EXPECT_TRUE(oracle::naive_trellis_search(s, {2000, 6}));
  expect_sound(s, found.move);
  // Every removed node shares the facet.
  const MisInstance& mis = s.mis();
  bool shared = false;
  for (int d = 0; d < kDims; ++d) {
    shared |= std::all_of(found.move.removals.begin(), found.move.removals.end(), [&](NodeId x) {
      return mis.triple(x)[d] == mis.triple(found.move.removals[0])[d];
    });
  }
  EXPECT_TRUE(shared);
}

TEST(Trellis, GeneralizesSwap1AndSwap2) {
  Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const MisInstance mis(testing::random_small_qc(5 + trial % 3, rng));
    const SolutionState s = testing::random_maximal(mis, rng);
    bool smaller = search_swap1(s).has_value();
    if (!smaller) smaller = search_swap2(s).has_value();
    if (!smaller) continue;
    ++checked;
    EXPECT_TRUE(search_trellis(s));
  }
  EXPECT_GE(checked, 60);
}

TEST(LocalSearch, TinyInstanceIsOptimal) {
  const MisInstance mis(PlsInstance(2, t1s({{1, 1, 1}})));
  for (LsLevel level : {LsLevel::kL1, LsLevel::kL2, LsLevel::kTrellis, LsLevel::kL3}) {
    SolutionState s(mis);
    Rng rng(1);
    const auto stats = local_search(s, level, rng);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(stats.final_size, 3u);
    EXPECT_EQ(stats.initial_size, 0u);
  }
}

TEST(LocalSearch, FinalStatesAreLocallyOptimal) {
  Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const MisInstance mis(testing::random_small_qc(4 + trial % 2, rng));
    for (LsLevel level : {LsLevel::kL1, LsLevel::kL2, LsLevel::kTrellis, LsLevel::kL3}) {
      SolutionState s = testing::random_maximal(mis, rng);
      const std::size_t start = s.size();
      const auto stats = local_search(s, level, rng);
      EXPECT_GE(s.size(), start);
      EXPECT_EQ(stats.final_size, s.size());
      EXPECT_TRUE(validate_extension(mis.instance(), s.solution_triples()));
      const int p = level == LsLevel::kL1 ? 1 : level == LsLevel::kL3 ? 3 : 2;
      EXPECT_TRUE(oracle::naive_is_p_maximal(s, p, kBudget)) << level_name(level);
      if (level == LsLevel::kTrellis) {
        EXPECT_FALSE(oracle::naive_trellis_search(s, kBudget));
      }
    }
  }
}

TEST(LocalSearch, SizeGrowsByMoveGains) {
  const MisInstance mis(generate_qc(20, 0.5, 4));
  Rng rng(3);
  SolutionState s = testing::random_maximal(mis, rng);
  const std::size_t start = s.size();
  const auto stats = local_search(s, LsLevel::kL3, rng);
  EXPECT_EQ(stats.initial_size, start);
  EXPECT_GE(s.size(), start + stats.total_moves());
  EXPECT_TRUE(is_one_maximal(s));
  EXPECT_FALSE(search_swap2(s));
  EXPECT_FALSE(search_swap3(s));
}

TEST(LocalSearch, LevelNames) {
  EXPECT_EQ(level_name(LsLevel::kL1), "1-LS");
  EXPECT_EQ(level_name(LsLevel::kTrellis), "Tr-LS");
}

}  // namespace
}  // namespace plse

#include "plse/neighborhoods.hpp"

namespace plse {
namespace {

enum Search { kSwap1 = 0, kSwap2 = 1, kSwap3 = 2, kTrellis = 3 };

std::optional<Move> run_search(Search which, const SolutionState& s) {
  switch (which) {
    case kSwap1:
      return search_swap1(s);
    case kSwap2:
      return search_swap2(s);
    case kSwap3:
      return search_swap3(s);
    case kTrellis:
      return search_trellis(s);
  }
  return std::nullopt;
}

std::vector<Search> pipeline(LsLevel level) {
  switch (level) {
    case LsLevel::kL1:
      return {kSwap1};
    case LsLevel::kL2:
      return {kSwap1, kSwap2};
    case LsLevel::kTrellis:
      return {kSwap1, kSwap2, kTrellis};
    case LsLevel::kL3:
      return {kSwap1, kSwap2, kSwap3};
  }
  return {};
}

}  // namespace

LsStats local_search(SolutionState& state, LsLevel level, Rng& rng) {
  LsStats stats;
  stats.initial_size = state.size();
  maximalize(state, rng);
  const auto searches = pipeline(level);

  bool improved = true;
  while (improved) {
    improved = false;
    for (Search which : searches) {
      auto move = run_search(which, state);
      if (!move) continue;
      apply_move(state, *move);
      maximalize(state, rng);
      ++stats.moves[which];
      improved = true;
      break;
    }
  }
  stats.final_size = state.size();
  return stats;
}

}  // namespace plse

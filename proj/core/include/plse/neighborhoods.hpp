#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "plse/random.hpp"
#include "plse/solution_state.hpp"

namespace plse {

/// One swap: remove `removals` from the solution, then insert `insertions`
/// (all free once the removals are applied).
struct Move {
  std::vector<NodeId> removals;
  std::vector<NodeId> insertions;

  int gain() const {
    return static_cast<int>(insertions.size()) - static_cast<int>(removals.size());
  }
};

/// Applies a move. Throws PreconditionError if a removal is not a solution
/// node or an insertion is not free at the time it is inserted.
void apply_move(SolutionState& state, const Move& move);

/// Inserts uniformly random free nodes until the solution is maximal.
void maximalize(SolutionState& state, Rng& rng);

/// True iff no solution node has 1-tight neighbors on two different lines.
bool is_one_maximal(const SolutionState& state);

// Neighborhood searches. Each returns the first improving move in scan order
// or nullopt if none exists. Preconditions are checked and violations throw
// PreconditionError.

/// (1, n^2)-swap. Requires a maximal solution. O(|S|) scan; O(n) to build
/// the returned move.
std::optional<Move> search_swap1(const SolutionState& state);

/// (2, n^2)-swap. Requires a 1-maximal solution. Scans 2-tight nodes; each
/// costs O(1).
std::optional<Move> search_swap2(const SolutionState& state);

/// (3, n^2)-swap. Requires a 2-maximal solution. Tries every 3-tight node
/// (removing its three solution neighbors), then every solution node with a
/// pair of 2-tight neighbors on different lines whose other solution
/// neighbors differ.
std::optional<Move> search_swap3(const SolutionState& state);

/// Trellis-swap. Requires a maximal solution. For each facet (direction d,
/// value k) in lexicographic order, removes every solution node of the
/// facet and re-fills it from the freed nodes via bipartite matching.
std::optional<Move> search_trellis(const SolutionState& state);

enum class LsLevel { kL1, kL2, kTrellis, kL3 };

std::string_view level_name(LsLevel level);

struct LsStats {
  std::size_t initial_size = 0;
  std::size_t final_size = 0;
  std::size_t moves[4] = {0, 0, 0, 0};  // swap1, swap2, swap3, trellis

  std::size_t total_moves() const { return moves[0] + moves[1] + moves[2] + moves[3]; }
};

/// Variable-depth descent. Pipelines:
///   L1: swap1          L2: swap1, swap2
///   TR: swap1, swap2, trellis     L3: swap1, swap2, swap3
/// The solution is maximalized first and after every applied move, and the
/// pipeline restarts from its cheapest search after each improvement. Ends
/// when every search in the pipeline reports no improving move.
LsStats local_search(SolutionState& state, LsLevel level, Rng& rng);

}  // namespace plse

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plse/neighborhoods.hpp"

namespace plse {

struct IlsConfig {
  LsLevel level = LsLevel::kTrellis;
  double time_limit_s = 30.0;
  std::uint64_t seed = 1;
  /// Cap on forced insertions per kick; defaults to the number of
  /// non-solution nodes at kick time.
  std::optional<std::size_t> kick_cap;
  bool greedy_lookahead = true;
  /// Stop after this many local-search runs (1 = plain local search).
  std::optional<std::uint64_t> max_iterations;
  /// Stop as soon as L u S is a complete Latin square.
  bool stop_when_complete = true;
};

struct IlsStats {
  std::size_t initial_size = 0;
  std::size_t best_size = 0;
  std::uint64_t iterations = 0;
  std::size_t first_ls_improvement = 0;
  /// (elapsed ms, best size) at start and at every strict improvement.
  std::vector<std::pair<double, std::size_t>> series;
  double mean_ls_ms = 0.0;
  double elapsed_ms = 0.0;

  /// Best size reached by `ms` milliseconds into the run.
  std::size_t best_at(double ms) const;
};

struct IlsResult {
  std::vector<NodeId> best;  // sorted node ids of the incumbent
  IlsStats stats;
};

/// Min-residual-degree greedy construction ("G5-like"). Repeatedly inserts
/// the free node with the fewest free neighbors; with `lookahead`, ties go
/// to the smallest sum of residual degrees over its free neighbors, and any
/// remaining ties are broken uniformly at random. The result is maximal.
SolutionState greedy_init(const MisInstance& mis, Rng& rng, bool lookahead = true);

/// Kick size k with P(k = j) = 2^-j for j >= 1, truncated at `cap`.
std::size_t sample_kick_size(Rng& rng, std::size_t cap);

/// First node forced into the solution by a kick: among non-solution
/// neighbors of solution nodes that have a 1-tight neighbor, the one that
/// left the solution longest ago (smallest last_out; ties at random). Falls
/// back to all non-solution neighbors of the solution when no solution node
/// has a 1-tight neighbor. Returns kNoNode if there is no candidate.
NodeId select_first_kick_node(const SolutionState& state, Rng& rng);

/// Forces u into the solution, evicting its solution neighbors.
void force_insert(SolutionState& state, NodeId u);

/// Resets `state` to `best`, forces k non-solution nodes in (the first one
/// chosen by select_first_kick_node, the rest uniformly), then maximalizes.
/// Returns false, leaving `state` equal to `best`, if every node is already
/// in the solution.
bool kick(SolutionState& state, const SolutionState& best, Rng& rng,
          std::optional<std::size_t> cap = std::nullopt);

/// Iterated local search: greedy start, then local search / accept if not
/// worse / kick, until the time limit.
IlsResult run_ils(const MisInstance& mis, const IlsConfig& config);

}  // namespace plse

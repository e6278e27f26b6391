#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plse/matching.hpp"
#include "plse/neighborhoods.hpp"

// Brute-force references for tests. Everything here works from triples and
// Hamming distances only; none of it reads the incremental bookkeeping of a
// SolutionState beyond its member list.

namespace plse::oracle {

struct OracleBudget {
  std::size_t max_nodes = 30;
  int max_n = 5;
};

struct MisResult {
  std::size_t size = 0;
  std::vector<NodeId> witness;
};

/// Exact maximum independent set of G_L by branch and bound. Branches on
/// the grid line with the fewest remaining nodes; the bound is the number of
/// lines of one direction still holding a node. Throws BudgetExceeded if the
/// instance is above budget.
MisResult brute_force_mis(const MisInstance& mis, OracleBudget budget = {});

/// Exact maximum independent set of the subgraph induced by `nodes`.
MisResult exact_mis_of(const MisInstance& mis, std::span<const NodeId> nodes);

/// Enumerates every p-subset R of the solution and the exact MIS of the
/// nodes freed by removing R. Returns an improving move iff one exists.
std::optional<Move> naive_swap_search(const SolutionState& state, int p, OracleBudget budget = {});

/// For every facet, the exact MIS of the trellis R u F1 u F2 computed from
/// definitions. Returns an improving move iff some trellis MIS exceeds |R|.
std::optional<Move> naive_trellis_search(const SolutionState& state, OracleBudget budget = {});

/// Simple augmenting-path (Kuhn) matching size.
std::size_t reference_matching(const BipartiteGraph& g);

/// True iff the state's solution admits no improving (q, n^2)-swap for all
/// q <= p, per naive_swap_search.
bool naive_is_p_maximal(const SolutionState& state, int p, OracleBudget budget = {});

}  // namespace plse::oracle

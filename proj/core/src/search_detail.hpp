#pragma once

#include "plse/errors.hpp"
#include "plse/solution_state.hpp"

namespace plse::detail {

/// First 1-tight node on the direction-d line through solution node x.
/// Its unique solution neighbor is necessarily x.
inline NodeId one_tight_on_line(const SolutionState& s, NodeId x, int d) {
  for (NodeId w : s.mis().line(x, d)) {
    if (w != x && s.tightness(w) == 1) return w;
  }
  throw std::logic_error("mu counter out of sync: no 1-tight node on line");
}

/// The two directions carrying solution neighbors of a 2-tight node.
inline void two_tight_dirs(const SolutionState& s, NodeId u, int* a, int* b) {
  *a = -1;
  for (int d = 0; d < kDims; ++d) {
    if (s.solution_neighbor(u, d) == kNoNode) continue;
    if (*a < 0)
      *a = d;
    else
      *b = d;
  }
}

inline void require_maximal(const SolutionState& s, const char* who) {
  if (!s.is_maximal()) throw PreconditionError(std::string(who) + ": solution is not maximal");
}

}  // namespace plse::detail

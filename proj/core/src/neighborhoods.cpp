#include "plse/neighborhoods.hpp"

#include "search_detail.hpp"

namespace plse {

using detail::one_tight_on_line;

void apply_move(SolutionState& state, const Move& move) {
  for (NodeId x : move.removals) state.remove(x);
  for (NodeId v : move.insertions) state.insert(v);
}

void maximalize(SolutionState& state, Rng& rng) {
  while (state.free_count() > 0) {
    const auto free = state.free_nodes();
    state.insert(free[uniform_index(rng, free.size())]);
  }
}

bool is_one_maximal(const SolutionState& state) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state.nu_at(i) >= 2) return false;
  }
  return true;
}

std::optional<Move> search_swap1(const SolutionState& state) {
  detail::require_maximal(state, "search_swap1");
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state.nu_at(i) < 2) continue;
    const NodeId x = state.solution()[i];
    Move move;
    move.removals.push_back(x);
    // One 1-tight node per line; nodes on different lines through x are
    // at distance 2 from each other.
    for (int d = 0; d < kDims; ++d) {
      if (state.mu(x, d) > 0) move.insertions.push_back(one_tight_on_line(state, x, d));
    }
    return move;
  }
  return std::nullopt;
}

std::optional<Move> search_swap2(const SolutionState& state) {
  detail::require_maximal(state, "search_swap2");
  if (!is_one_maximal(state)) throw PreconditionError("search_swap2: solution is not 1-maximal");
  const MisInstance& mis = state.mis();

  for (NodeId u : state.non_free_nodes()) {
    if (state.tightness(u) != 2) continue;
    int a = 0, b = 0;
    detail::two_tight_dirs(state, u, &a, &b);
    const int c = third_dim(a, b);
    const NodeId x = state.solution_neighbor(u, a);
    const NodeId y = state.solution_neighbor(u, b);

    // After removing x, y and inserting u, candidates lie on the lines
    // (x,b), (x,c), (y,a), (y,c). Only (x,b) and (y,a) meet, at the corner
    // x + y - u, which is the only possible 2-tight candidate.
    const bool xc = state.mu(x, c) > 0;
    const bool yc = state.mu(y, c) > 0;
    const bool xb = state.mu(x, b) > 0;
    const bool ya = state.mu(y, a) > 0;
    NodeId corner = kNoNode;
    if (!xb && !ya) {
      Triple p = mis.triple(u);
      p[a] = mis.triple(x)[a];
      p[b] = mis.triple(y)[b];
      const NodeId w = mis.node_at(p);
      if (w != kNoNode && state.tightness(w) == 2) corner = w;
    }
    const int nu = xc + yc + xb + ya + (corner != kNoNode);
    if (nu < 2) continue;

    Move move;
    move.removals = {x, y};
    move.insertions.push_back(u);
    if (xc) move.insertions.push_back(one_tight_on_line(state, x, c));
    if (yc) move.insertions.push_back(one_tight_on_line(state, y, c));
    if (xb) move.insertions.push_back(one_tight_on_line(state, x, b));
    if (ya) move.insertions.push_back(one_tight_on_line(state, y, a));
    if (corner != kNoNode) move.insertions.push_back(corner);
    return move;
  }
  return std::nullopt;
}

std::string_view level_name(LsLevel level) {
  switch (level) {
    case LsLevel::kL1:
      return "1-LS";
    case LsLevel::kL2:
      return "2-LS";
    case LsLevel::kTrellis:
      return "Tr-LS";
    case LsLevel::kL3:
      return "3-LS";
  }
  return "?";
}

}  // namespace plse

#include "plse/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "plse/errors.hpp"

namespace plse::oracle {
namespace {

void check_budget(const MisInstance& mis, const OracleBudget& budget) {
  if (mis.node_count() > budget.max_nodes || mis.n() > budget.max_n) {
    throw BudgetExceeded("oracle budget exceeded: n=" + std::to_string(mis.n()) +
                         ", nodes=" + std::to_string(mis.node_count()));
  }
}

bool adjacent(const MisInstance& mis, NodeId a, NodeId b) {
  return hamming_distance(mis.triple(a), mis.triple(b)) == 1;
}

// Branch and bound over a node subset. Grid lines are cliques, so for each
// direction the number of distinct lines among the remaining nodes bounds
// the independent set that can still be added.
class BranchAndBound {
 public:
  BranchAndBound(const MisInstance& mis, std::vector<NodeId> nodes)
      : mis_(mis), nodes_(std::move(nodes)) {}

  MisResult solve() {
    greedy();
    std::vector<NodeId> chosen;
    recurse(nodes_, chosen);
    return {best_.size(), best_};
  }

 private:
  std::size_t line_key(NodeId v, int d) const {
    const Triple& t = mis_.triple(v);
    const auto [a, b] = other_dims(d);
    return static_cast<std::size_t>((t[a] * mis_.n() + t[b]));
  }

  std::size_t bound(const std::vector<NodeId>& rest) const {
    std::size_t best = rest.size();
    std::vector<char> seen(static_cast<std::size_t>(mis_.n() * mis_.n()));
    for (int d = 0; d < kDims; ++d) {
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t lines = 0;
      for (NodeId v : rest) {
        auto& s = seen[line_key(v, d)];
        lines += !s;
        s = 1;
      }
      best = std::min(best, lines);
    }
    return best;
  }

  void greedy() {
    std::vector<NodeId> rest = nodes_;
    std::vector<NodeId> chosen;
    while (!rest.empty()) {
      const NodeId v = rest.front();
      chosen.push_back(v);
      std::erase_if(rest, [&](NodeId w) { return w == v || adjacent(mis_, v, w); });
    }
    best_ = chosen;
  }

  void recurse(const std::vector<NodeId>& rest, std::vector<NodeId>& chosen) {
    if (chosen.size() + bound(rest) <= best_.size()) return;
    if (rest.empty()) {
      best_ = chosen;
      return;
    }
    // Smallest line among the remaining nodes: some optimum either takes
    // one of its nodes or none of them.
    int best_d = 0;
    std::size_t best_key = 0, best_count = rest.size() + 1;
    for (int d = 0; d < kDims; ++d) {
      std::vector<std::size_t> count(static_cast<std::size_t>(mis_.n() * mis_.n()), 0);
      for (NodeId v : rest) ++count[line_key(v, d)];
      for (std::size_t k = 0; k < count.size(); ++k) {
        if (count[k] > 0 && count[k] < best_count) {
          best_count = count[k];
          best_key = k;
          best_d = d;
        }
      }
    }
    std::vector<NodeId> line;
    for (NodeId v : rest) {
      if (line_key(v, best_d) == best_key) line.push_back(v);
    }
    for (NodeId v : line) {
      std::vector<NodeId> next;
      for (NodeId w : rest) {
        if (w != v && !adjacent(mis_, v, w)) next.push_back(w);
      }
      chosen.push_back(v);
      recurse(next, chosen);
      chosen.pop_back();
    }
    std::vector<NodeId> without;
    for (NodeId w : rest) {
      if (line_key(w, best_d) != best_key) without.push_back(w);
    }
    recurse(without, chosen);
  }

  const MisInstance& mis_;
  std::vector<NodeId> nodes_;
  std::vector<NodeId> best_;
};

// Solution neighbors of v recomputed from distances.
std::vector<NodeId> solution_neighbors(const MisInstance& mis, std::span<const NodeId> solution,
                                       NodeId v) {
  std::vector<NodeId> out;
  for (NodeId x : solution) {
    if (adjacent(mis, v, x)) out.push_back(x);
  }
  return out;
}

// Non-solution nodes all of whose solution neighbors lie in `removed`,
// plus the removed nodes themselves.
std::vector<NodeId> freed_by(const MisInstance& mis, std::span<const NodeId> solution,
                             std::span<const NodeId> removed) {
  std::vector<char> in_solution(mis.node_count(), 0), in_removed(mis.node_count(), 0);
  for (NodeId x : solution) in_solution[static_cast<std::size_t>(x)] = 1;
  for (NodeId x : removed) in_removed[static_cast<std::size_t>(x)] = 1;
  std::vector<NodeId> out(removed.begin(), removed.end());
  for (std::size_t v = 0; v < mis.node_count(); ++v) {
    if (in_solution[v]) continue;
    bool ok = true;
    for (NodeId x : solution) {
      if (!in_removed[static_cast<std::size_t>(x)] && adjacent(mis, static_cast<NodeId>(v), x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

}  // namespace

MisResult exact_mis_of(const MisInstance& mis, std::span<const NodeId> nodes) {
  return BranchAndBound(mis, std::vector<NodeId>(nodes.begin(), nodes.end())).solve();
}

MisResult brute_force_mis(const MisInstance& mis, OracleBudget budget) {
  check_budget(mis, budget);
  std::vector<NodeId> all(mis.node_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<NodeId>(v);
  return BranchAndBound(mis, std::move(all)).solve();
}

std::optional<Move> naive_swap_search(const SolutionState& state, int p, OracleBudget budget) {
  const MisInstance& mis = state.mis();
  check_budget(mis, budget);
  if (p < 1 || p > 3) throw InputError("naive_swap_search: p must be 1, 2 or 3");
  const auto solution = state.solution_sorted();
  const auto k = static_cast<std::size_t>(p);
  if (solution.size() < k) return std::nullopt;

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<NodeId> removed(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) removed[i] = solution[idx[i]];
    const auto freed = freed_by(mis, solution, removed);
    auto mis_freed = exact_mis_of(mis, freed);
    if (mis_freed.size > k) return Move{removed, std::move(mis_freed.witness)};

    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == solution.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

bool naive_is_p_maximal(const SolutionState& state, int p, OracleBudget budget) {
  for (int q = 1; q <= p; ++q) {
    if (naive_swap_search(state, q, budget)) return false;
  }
  return true;
}

std::optional<Move> naive_trellis_search(const SolutionState& state, OracleBudget budget) {
  const MisInstance& mis = state.mis();
  check_budget(mis, budget);
  const auto solution = state.solution_sorted();
  std::vector<char> in_solution(mis.node_count(), 0);
  for (NodeId x : solution) in_solution[static_cast<std::size_t>(x)] = 1;

  for (int d = 0; d < kDims; ++d) {
    for (int k = 0; k < mis.n(); ++k) {
      std::vector<NodeId> r;
      for (NodeId x : solution) {
        if (mis.triple(x)[d] == k) r.push_back(x);
      }
      auto in_r = [&](NodeId x) { return std::find(r.begin(), r.end(), x) != r.end(); };
      std::vector<NodeId> trellis = r;
      for (std::size_t v = 0; v < mis.node_count(); ++v) {
        if (in_solution[v]) continue;
        const auto nbrs = solution_neighbors(mis, solution, static_cast<NodeId>(v));
        if (nbrs.size() != 1 && nbrs.size() != 2) continue;
        if (std::all_of(nbrs.begin(), nbrs.end(), in_r)) trellis.push_back(static_cast<NodeId>(v));
      }
      auto best = exact_mis_of(mis, trellis);
      if (best.size > r.size()) return Move{std::move(r), std::move(best.witness)};
    }
  }
  return std::nullopt;
}

std::size_t reference_matching(const BipartiteGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.left_count()));
  for (const auto& e : g.edges()) adj[static_cast<std::size_t>(e.left)].push_back(e.right);
  std::vector<int> match_right(static_cast<std::size_t>(g.right_count()), -1);
  std::vector<char> visited;

  std::function<bool(int)> augment = [&](int u) {
    for (int r : adj[static_cast<std::size_t>(u)]) {
      auto& seen = visited[static_cast<std::size_t>(r)];
      if (seen) continue;
      seen = 1;
      const int m = match_right[static_cast<std::size_t>(r)];
      if (m < 0 || augment(m)) {
        match_right[static_cast<std::size_t>(r)] = u;
        return true;
      }
    }
    return false;
  };

  std::size_t size = 0;
  for (int u = 0; u < g.left_count(); ++u) {
    visited.assign(static_cast<std::size_t>(g.right_count()), 0);
    size += augment(u);
  }
  return size;
}

}  // namespace plse::oracle

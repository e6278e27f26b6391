#include "plse/ils.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace plse {
namespace {

// Free nodes bucketed by residual degree with O(1) moves between buckets.
class DegreeBuckets {
 public:
  DegreeBuckets(std::size_t nodes, int max_degree)
      : buckets_(static_cast<std::size_t>(max_degree) + 1),
        degree_(nodes, 0),
        slot_(nodes, 0),
        present_(nodes, 0) {}

  void add(NodeId v, int deg) {
    const auto vi = static_cast<std::size_t>(v);
    degree_[vi] = deg;
    auto& b = buckets_[static_cast<std::size_t>(deg)];
    slot_[vi] = b.size();
    b.push_back(v);
    present_[vi] = 1;
    min_ = std::min(min_, deg);
  }

  void erase(NodeId v) {
    const auto vi = static_cast<std::size_t>(v);
    if (!present_[vi]) return;
    auto& b = buckets_[static_cast<std::size_t>(degree_[vi])];
    const NodeId last = b.back();
    b[slot_[vi]] = last;
    slot_[static_cast<std::size_t>(last)] = slot_[vi];
    b.pop_back();
    present_[vi] = 0;
  }

  void decrement(NodeId v) {
    const int deg = degree_[static_cast<std::size_t>(v)];
    erase(v);
    add(v, deg - 1);
  }

  int degree(NodeId v) const { return degree_[static_cast<std::size_t>(v)]; }

  const std::vector<NodeId>& min_bucket() {
    while (buckets_[static_cast<std::size_t>(min_)].empty()) ++min_;
    return buckets_[static_cast<std::size_t>(min_)];
  }

 private:
  std::vector<std::vector<NodeId>> buckets_;
  std::vector<int> degree_;
  std::vector<std::size_t> slot_;
  std::vector<char> present_;
  int min_ = std::numeric_limits<int>::max();
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SolutionState greedy_init(const MisInstance& mis, Rng& rng, bool lookahead) {
  SolutionState state(mis);
  DegreeBuckets buckets(mis.node_count(), 3 * mis.n());
  for (std::size_t v = 0; v < mis.node_count(); ++v) {
    int deg = 0;
    mis.for_each_neighbor(static_cast<NodeId>(v), [&](NodeId, int) { ++deg; });
    buckets.add(static_cast<NodeId>(v), deg);
  }

  std::vector<NodeId> leaving;
  while (state.free_count() > 0) {
    const auto& cands = buckets.min_bucket();
    NodeId pick = kNoNode;
    if (!lookahead) {
      pick = cands[uniform_index(rng, cands.size())];
    } else {
      long best_score = std::numeric_limits<long>::max();
      std::size_t ties = 0;
      for (NodeId c : cands) {
        long score = 0;
        mis.for_each_neighbor(c, [&](NodeId w, int) {
          if (state.is_free(w)) score += buckets.degree(w);
        });
        if (score < best_score) {
          best_score = score;
          pick = c;
          ties = 1;
        } else if (score == best_score && uniform_index(rng, ++ties) == 0) {
          pick = c;
        }
      }
    }

    leaving.clear();
    mis.for_each_neighbor(pick, [&](NodeId w, int) {
      if (state.is_free(w)) leaving.push_back(w);
    });
    state.insert(pick);
    buckets.erase(pick);
    for (NodeId w : leaving) buckets.erase(w);
    for (NodeId w : leaving) {
      mis.for_each_neighbor(w, [&](NodeId z, int) {
        if (state.is_free(z)) buckets.decrement(z);
      });
    }
  }
  return state;
}

std::size_t sample_kick_size(Rng& rng, std::size_t cap) {
  std::size_t k = 1;
  while (k < cap && coin_flip(rng)) ++k;
  return k;
}

NodeId select_first_kick_node(const SolutionState& state, Rng& rng) {
  auto has_one_tight = [&](NodeId x) {
    return state.mu(x, 0) > 0 || state.mu(x, 1) > 0 || state.mu(x, 2) > 0;
  };
  bool restricted = std::any_of(state.solution().begin(), state.solution().end(), has_one_tight);

  NodeId pick = kNoNode;
  std::uint64_t oldest = std::numeric_limits<std::uint64_t>::max();
  std::size_t ties = 0;
  for (NodeId w : state.non_solution_nodes()) {
    bool eligible = false;
    for (int d = 0; d < kDims && !eligible; ++d) {
      const NodeId x = state.solution_neighbor(w, d);
      eligible = x != kNoNode && (!restricted || has_one_tight(x));
    }
    if (!eligible) continue;
    const std::uint64_t stamp = state.last_out(w);
    if (stamp < oldest) {
      oldest = stamp;
      pick = w;
      ties = 1;
    } else if (stamp == oldest && uniform_index(rng, ++ties) == 0) {
      pick = w;
    }
  }
  return pick;
}

void force_insert(SolutionState& state, NodeId u) {
  NodeId evict[kDims];
  for (int d = 0; d < kDims; ++d) evict[d] = state.solution_neighbor(u, d);
  for (NodeId y : evict) {
    if (y != kNoNode) state.remove(y);
  }
  state.insert(u);
}

bool kick(SolutionState& state, const SolutionState& best, Rng& rng,
          std::optional<std::size_t> cap) {
  state.restore(best);
  const std::size_t outside = state.node_count() - state.size();
  if (outside == 0) return false;

  const std::size_t k = sample_kick_size(rng, std::min(cap.value_or(outside), outside));
  NodeId first = select_first_kick_node(state, rng);
  if (first == kNoNode) {
    // Only free nodes remain outside (best was not maximal).
    first = state.non_solution_nodes()[uniform_index(rng, outside)];
  }
  force_insert(state, first);
  for (std::size_t i = 1; i < k; ++i) {
    const auto rest = state.non_solution_nodes();
    if (rest.empty()) break;
    force_insert(state, rest[uniform_index(rng, rest.size())]);
  }
  maximalize(state, rng);
  return true;
}

std::size_t IlsStats::best_at(double ms) const {
  std::size_t best = initial_size;
  for (const auto& [t, size] : series) {
    if (t > ms) break;
    best = size;
  }
  return best;
}

IlsResult run_ils(const MisInstance& mis, const IlsConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const double limit_ms = config.time_limit_s * 1000.0;
  const std::size_t complete = mis.instance().empty_cells();
  Rng rng(config.seed);

  IlsStats stats;
  SolutionState state = greedy_init(mis, rng, config.greedy_lookahead);
  SolutionState best = state;
  stats.initial_size = state.size();
  stats.series.emplace_back(ms_since(start), state.size());

  double ls_ms_total = 0.0;
  while (ms_since(start) < limit_ms) {
    const auto ls_start = std::chrono::steady_clock::now();
    local_search(state, config.level, rng);
    ls_ms_total += ms_since(ls_start);
    ++stats.iterations;
    if (stats.iterations == 1) stats.first_ls_improvement = state.size() - stats.initial_size;

    if (state.size() >= best.size()) {
      if (state.size() > best.size()) stats.series.emplace_back(ms_since(start), state.size());
      best.restore(state);
    }
    if (config.stop_when_complete && best.size() == complete) break;
    if (config.max_iterations && stats.iterations >= *config.max_iterations) break;
    if (ms_since(start) >= limit_ms) break;
    if (!kick(state, best, rng, config.kick_cap)) break;
  }

  stats.best_size = best.size();
  stats.mean_ls_ms = stats.iterations ? ls_ms_total / static_cast<double>(stats.iterations) : 0.0;
  stats.elapsed_ms = ms_since(start);
  return {best.solution_sorted(), std::move(stats)};
}

}  // namespace plse

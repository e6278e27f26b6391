#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "plse/mis_model.hpp"

namespace plse {

/// Incremental independent-set representation over a MisInstance.
///
/// All nodes live in one permutation split into three sections:
///
///   [0, size)                     solution nodes
///   [size, size + free_count)     free nodes (0-tight)
///   [size + free_count, N)        non-free nodes (1..3-tight)
///
/// For every non-solution node we keep its tightness and its solution
/// neighbor per direction (a node has at most one solution neighbor on each
/// of its three lines). For every solution node x and direction d, mu(x, d)
/// counts the 1-tight nodes on the direction-d line through x.
///
/// insert() and remove() touch only the 3(n-1) line neighbors of the node,
/// and section moves swap with a section boundary, so both are O(n).
///
/// The state refers to its MisInstance by pointer; the instance must outlive it.
class SolutionState {
 public:
  explicit SolutionState(const MisInstance& mis);

  /// Naive recomputation of every field for the independent set `nodes`.
  /// Throws InputError if the set is not independent or contains bad ids.
  static SolutionState rebuild_from_scratch(const MisInstance& mis, std::span<const NodeId> nodes);

  const MisInstance& mis() const noexcept { return *mis_; }

  /// Moves a free node into the solution. Throws PreconditionError otherwise.
  void insert(NodeId x);
  /// Moves a solution node out; it becomes free. Throws PreconditionError otherwise.
  void remove(NodeId x);

  /// Copies the solution and bookkeeping of `snapshot` (taken from a state
  /// over the same instance) while keeping this state's step counter and
  /// last_out stamps.
  void restore(const SolutionState& snapshot);

  std::size_t size() const noexcept { return sol_count_; }
  std::size_t free_count() const noexcept { return free_count_; }
  std::size_t node_count() const noexcept { return perm_.size(); }
  bool is_maximal() const noexcept { return free_count_ == 0; }

  bool in_solution(NodeId v) const { return pos(v) < sol_count_; }
  bool is_free(NodeId v) const {
    const auto p = pos(v);
    return p >= sol_count_ && p < sol_count_ + free_count_;
  }

  /// Number of solution neighbors of v (0 for solution nodes).
  int tightness(NodeId v) const { return tau_[static_cast<std::size_t>(v)]; }
  /// Solution neighbor of a non-solution node v along direction d, or kNoNode.
  NodeId solution_neighbor(NodeId v, int d) const {
    return nbr_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
  }
  /// 1-tight neighbors of solution node x on its direction-d line.
  int mu(NodeId x, int d) const { return mu_[static_cast<std::size_t>(x)][static_cast<std::size_t>(d)]; }
  /// Number of directions d with mu(x, d) > 0. Throws if x is not in the solution.
  int nu(NodeId x) const;
  /// nu of solution()[i]; reads memory in permutation order, for full scans.
  int nu_at(std::size_t i) const { return std::popcount(mask_[i]); }

  std::span<const NodeId> solution() const { return {perm_.data(), sol_count_}; }
  std::span<const NodeId> free_nodes() const { return {perm_.data() + sol_count_, free_count_}; }
  std::span<const NodeId> non_free_nodes() const {
    return {perm_.data() + sol_count_ + free_count_, perm_.size() - sol_count_ - free_count_};
  }
  std::span<const NodeId> non_solution_nodes() const {
    return {perm_.data() + sol_count_, perm_.size() - sol_count_};
  }

  /// Global step at which v last left the solution (0 if it never did).
  std::uint64_t last_out(NodeId v) const { return last_out_[static_cast<std::size_t>(v)]; }
  void set_last_out(NodeId v, std::uint64_t step) { last_out_[static_cast<std::size_t>(v)] = step; }
  /// Incremented on every insert and remove.
  std::uint64_t step() const noexcept { return step_; }

  std::vector<NodeId> solution_sorted() const;
  std::vector<Triple> solution_triples() const;

  /// Sanity check of the permutation/position arrays (O(N)).
  bool permutation_consistent() const;

  /// Same solution, free and non-free sets, and equal per-node tightness,
  /// solution-neighbor and mu fields. Permutation order and last_out are
  /// ignored.
  friend bool equivalent(const SolutionState& a, const SolutionState& b);

 private:
  std::size_t pos(NodeId v) const { return pos_[static_cast<std::size_t>(v)]; }
  void swap_positions(std::size_t i, std::size_t j);
  NodeId unique_neighbor(NodeId v, int* dir) const;
  void add_mu(NodeId x, int d, int delta);

  const MisInstance* mis_;
  std::vector<NodeId> perm_;
  std::vector<std::uint32_t> pos_;
  std::size_t sol_count_ = 0;
  std::size_t free_count_ = 0;
  std::vector<std::uint8_t> tau_;
  std::vector<std::array<NodeId, 3>> nbr_;
  std::vector<std::array<std::int32_t, 3>> mu_;
  std::vector<std::uint8_t> mask_;  // by position: bit d set iff mu(perm_[i], d) > 0
  std::vector<std::uint64_t> last_out_;
  std::uint64_t step_ = 0;
};

}  // namespace plse

#include "plse/solution_state.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "plse/errors.hpp"

namespace plse {

SolutionState::SolutionState(const MisInstance& mis)
    : mis_(&mis),
      perm_(mis.node_count()),
      pos_(mis.node_count()),
      free_count_(mis.node_count()),
      tau_(mis.node_count(), 0),
      nbr_(mis.node_count(), {kNoNode, kNoNode, kNoNode}),
      mu_(mis.node_count(), {0, 0, 0}),
      mask_(mis.node_count(), 0),
      last_out_(mis.node_count(), 0) {
  std::iota(perm_.begin(), perm_.end(), NodeId{0});
  std::iota(pos_.begin(), pos_.end(), std::uint32_t{0});
}

void SolutionState::swap_positions(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(perm_[i], perm_[j]);
  std::swap(mask_[i], mask_[j]);
  pos_[static_cast<std::size_t>(perm_[i])] = static_cast<std::uint32_t>(i);
  pos_[static_cast<std::size_t>(perm_[j])] = static_cast<std::uint32_t>(j);
}

void SolutionState::add_mu(NodeId x, int d, int delta) {
  auto& m = mu_[static_cast<std::size_t>(x)][static_cast<std::size_t>(d)];
  m += delta;
  auto& bits = mask_[pos(x)];
  if (m > 0)
    bits = static_cast<std::uint8_t>(bits | (1u << d));
  else
    bits = static_cast<std::uint8_t>(bits & ~(1u << d));
}

NodeId SolutionState::unique_neighbor(NodeId v, int* dir) const {
  const auto& nb = nbr_[static_cast<std::size_t>(v)];
  for (int d = 0; d < kDims; ++d) {
    if (nb[static_cast<std::size_t>(d)] != kNoNode) {
      *dir = d;
      return nb[static_cast<std::size_t>(d)];
    }
  }
  return kNoNode;
}

void SolutionState::insert(NodeId x) {
  if (!mis_->valid(x)) throw PreconditionError("insert: invalid node id");
  if (!is_free(x)) throw PreconditionError("insert: node is not free");
  ++step_;

  swap_positions(pos(x), sol_count_);
  ++sol_count_;
  --free_count_;

  mis_->for_each_neighbor(x, [&](NodeId w, int d) {
    const auto wi = static_cast<std::size_t>(w);
    switch (tau_[wi]) {
      case 0:
        // Free -> 1-tight: move to the head of the non-free section.
        swap_positions(pos(w), sol_count_ + free_count_ - 1);
        --free_count_;
        add_mu(x, d, 1);
        break;
      case 1: {
        int dy = 0;
        const NodeId y = unique_neighbor(w, &dy);
        add_mu(y, dy, -1);
        break;
      }
      default:
        break;
    }
    nbr_[wi][static_cast<std::size_t>(d)] = x;
    ++tau_[wi];
  });
}

void SolutionState::remove(NodeId x) {
  if (!mis_->valid(x)) throw PreconditionError("remove: invalid node id");
  if (!in_solution(x)) throw PreconditionError("remove: node is not in the solution");
  ++step_;

  // x falls to the first position of the free section.
  swap_positions(pos(x), sol_count_ - 1);
  --sol_count_;
  ++free_count_;
  mu_[static_cast<std::size_t>(x)] = {0, 0, 0};
  mask_[sol_count_] = 0;
  last_out_[static_cast<std::size_t>(x)] = step_;

  mis_->for_each_neighbor(x, [&](NodeId w, int d) {
    const auto wi = static_cast<std::size_t>(w);
    nbr_[wi][static_cast<std::size_t>(d)] = kNoNode;
    switch (--tau_[wi]) {
      case 0:
        swap_positions(pos(w), sol_count_ + free_count_);
        ++free_count_;
        break;
      case 1: {
        int dy = 0;
        const NodeId y = unique_neighbor(w, &dy);
        add_mu(y, dy, 1);
        break;
      }
      default:
        break;
    }
  });
}

void SolutionState::restore(const SolutionState& snapshot) {
  if (snapshot.mis_ != mis_) throw PreconditionError("restore: snapshot of a different instance");
  perm_ = snapshot.perm_;
  pos_ = snapshot.pos_;
  sol_count_ = snapshot.sol_count_;
  free_count_ = snapshot.free_count_;
  tau_ = snapshot.tau_;
  nbr_ = snapshot.nbr_;
  mu_ = snapshot.mu_;
  mask_ = snapshot.mask_;
}

int SolutionState::nu(NodeId x) const {
  if (!mis_->valid(x) || !in_solution(x)) throw PreconditionError("nu: node is not in the solution");
  return std::popcount(mask_[pos(x)]);
}

std::vector<NodeId> SolutionState::solution_sorted() const {
  std::vector<NodeId> out(solution().begin(), solution().end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> SolutionState::solution_triples() const {
  const auto ids = solution_sorted();
  return mis_->triples_of(ids);
}

SolutionState SolutionState::rebuild_from_scratch(const MisInstance& mis,
                                                  std::span<const NodeId> nodes) {
  const std::size_t count = mis.node_count();
  std::vector<char> member(count, 0);
  for (NodeId v : nodes) {
    if (!mis.valid(v)) throw InputError("rebuild: invalid node id");
    if (member[static_cast<std::size_t>(v)]) throw InputError("rebuild: duplicate node");
    member[static_cast<std::size_t>(v)] = 1;
  }

  SolutionState s(mis);
  // Tightness and solution neighbors straight from the definition: scan
  // every node of V_L against every solution node.
  for (std::size_t v = 0; v < count; ++v) {
    const Triple& tv = mis.triple(static_cast<NodeId>(v));
    for (NodeId x : nodes) {
      const Triple& tx = mis.triple(x);
      if (hamming_distance(tv, tx) != 1) continue;
      if (member[v]) throw InputError("rebuild: node set is not independent");
      int d = 0;
      while (tv[d] == tx[d]) ++d;
      s.nbr_[v][static_cast<std::size_t>(d)] = x;
      ++s.tau_[v];
    }
  }
  for (std::size_t v = 0; v < count; ++v) {
    if (s.tau_[v] != 1) continue;
    int d = 0;
    const NodeId y = s.unique_neighbor(static_cast<NodeId>(v), &d);
    ++s.mu_[static_cast<std::size_t>(y)][static_cast<std::size_t>(d)];
  }

  std::vector<NodeId> sol, fre, rest;
  for (std::size_t v = 0; v < count; ++v) {
    if (member[v])
      sol.push_back(static_cast<NodeId>(v));
    else if (s.tau_[v] == 0)
      fre.push_back(static_cast<NodeId>(v));
    else
      rest.push_back(static_cast<NodeId>(v));
  }
  s.perm_.clear();
  s.perm_.insert(s.perm_.end(), sol.begin(), sol.end());
  s.perm_.insert(s.perm_.end(), fre.begin(), fre.end());
  s.perm_.insert(s.perm_.end(), rest.begin(), rest.end());
  for (std::size_t i = 0; i < count; ++i) s.pos_[static_cast<std::size_t>(s.perm_[i])] = static_cast<std::uint32_t>(i);
  s.sol_count_ = sol.size();
  s.free_count_ = fre.size();
  for (std::size_t i = 0; i < s.sol_count_; ++i) {
    const auto& m = s.mu_[static_cast<std::size_t>(s.perm_[i])];
    s.mask_[i] = static_cast<std::uint8_t>((m[0] > 0) | (m[1] > 0) << 1 | (m[2] > 0) << 2);
  }
  return s;
}

bool SolutionState::permutation_consistent() const {
  if (perm_.size() != pos_.size() || sol_count_ + free_count_ > perm_.size()) return false;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (pos_[static_cast<std::size_t>(perm_[i])] != i) return false;
  }
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const auto t = tau_[static_cast<std::size_t>(perm_[i])];
    if (i < sol_count_ && t != 0) return false;
    if (i >= sol_count_ && i < sol_count_ + free_count_ && t != 0) return false;
    if (i >= sol_count_ + free_count_ && t == 0) return false;
    const auto& m = mu_[static_cast<std::size_t>(perm_[i])];
    const int bits = i < sol_count_ ? (m[0] > 0) | (m[1] > 0) << 1 | (m[2] > 0) << 2 : 0;
    if (mask_[i] != bits) return false;
  }
  return true;
}

bool equivalent(const SolutionState& a, const SolutionState& b) {
  if (a.mis_ != b.mis_ || a.node_count() != b.node_count()) return false;
  if (a.sol_count_ != b.sol_count_ || a.free_count_ != b.free_count_) return false;
  if (!a.permutation_consistent() || !b.permutation_consistent()) return false;
  for (std::size_t v = 0; v < a.node_count(); ++v) {
    const auto id = static_cast<NodeId>(v);
    if (a.in_solution(id) != b.in_solution(id) || a.is_free(id) != b.is_free(id)) return false;
    if (a.tau_[v] != b.tau_[v] || a.nbr_[v] != b.nbr_[v] || a.mu_[v] != b.mu_[v]) return false;
  }
  return true;
}

}  // namespace plse

#include <algorithm>
#include <array>

#include "plse/neighborhoods.hpp"
#include "search_detail.hpp"

namespace plse {
namespace {

using detail::one_tight_on_line;

struct Line {
  NodeId owner;  // solution node the line passes through
  int dir;
};

// Point where line (p, e) meets line (q, f), if they cross in a single point.
std::optional<Triple> crossing(const Triple& p, int e, const Triple& q, int f) {
  if (e == f) return std::nullopt;
  const int g = third_dim(e, f);
  if (p[g] != q[g]) return std::nullopt;
  Triple t = p;
  t[e] = q[e];
  return t;
}

// Case (I): remove the three solution neighbors of a 3-tight node u.
std::optional<Move> try_three_tight(const SolutionState& s, NodeId u) {
  const MisInstance& mis = s.mis();
  std::array<NodeId, 3> r{};
  for (int d = 0; d < kDims; ++d) r[static_cast<std::size_t>(d)] = s.solution_neighbor(u, d);

  // The six candidate lines pair up: line (r[d], e) and line (r[e], d)
  // cross at the corner u with coordinates d, e taken from r[d], r[e].
  // Lines of different pairs never carry adjacent candidates.
  struct Pair {
    bool first, second;
    NodeId corner;
  };
  std::array<Pair, 3> pairs{};
  int nu = 0;
  int k = 0;
  for (int d = 0; d < kDims; ++d) {
    for (int e = d + 1; e < kDims; ++e, ++k) {
      const NodeId rd = r[static_cast<std::size_t>(d)];
      const NodeId re = r[static_cast<std::size_t>(e)];
      Pair& pr = pairs[static_cast<std::size_t>(k)];
      pr.first = s.mu(rd, e) > 0;
      pr.second = s.mu(re, d) > 0;
      pr.corner = kNoNode;
      if (!pr.first && !pr.second) {
        Triple p = mis.triple(u);
        p[d] = mis.triple(rd)[d];
        p[e] = mis.triple(re)[e];
        const NodeId w = mis.node_at(p);
        if (w != kNoNode && s.tightness(w) == 2) pr.corner = w;
      }
      nu += pr.first + pr.second + (pr.corner != kNoNode);
    }
  }
  if (nu < 3) return std::nullopt;

  Move move;
  move.removals = {r[0], r[1], r[2]};
  move.insertions.push_back(u);
  k = 0;
  for (int d = 0; d < kDims; ++d) {
    for (int e = d + 1; e < kDims; ++e, ++k) {
      const Pair& pr = pairs[static_cast<std::size_t>(k)];
      if (pr.first) move.insertions.push_back(one_tight_on_line(s, r[static_cast<std::size_t>(d)], e));
      if (pr.second) move.insertions.push_back(one_tight_on_line(s, r[static_cast<std::size_t>(e)], d));
      if (pr.corner != kNoNode) move.insertions.push_back(pr.corner);
    }
  }
  return move;
}

// Exact maximum independent set of a small candidate set whose nodes are
// grouped into cliques (one group per grid line). At most one node per
// group, so the number of groups bounds the answer.
class SmallMis {
 public:
  SmallMis(const MisInstance& mis, const std::vector<std::vector<NodeId>>& groups)
      : mis_(mis), groups_(groups) {
    for (const auto& g : groups_) bound_ += !g.empty();
  }

  std::vector<NodeId> solve() {
    recurse(0);
    return best_;
  }

 private:
  void recurse(std::size_t idx) {
    if (best_.size() >= bound_) return;
    std::size_t left = 0;
    for (std::size_t i = idx; i < groups_.size(); ++i) left += !groups_[i].empty();
    if (chosen_.size() + left <= best_.size()) return;
    if (idx == groups_.size()) {
      best_ = chosen_;
      return;
    }
    for (NodeId w : groups_[idx]) {
      const bool ok = std::none_of(chosen_.begin(), chosen_.end(), [&](NodeId c) {
        return c == w || mis_.adjacent(c, w);
      });
      if (!ok) continue;
      chosen_.push_back(w);
      recurse(idx + 1);
      chosen_.pop_back();
      if (best_.size() >= bound_) return;
    }
    recurse(idx + 1);
  }

  const MisInstance& mis_;
  const std::vector<std::vector<NodeId>>& groups_;
  std::size_t bound_ = 0;
  std::vector<NodeId> chosen_;
  std::vector<NodeId> best_;
};

struct TwoTight {
  NodeId node;
  int dir_from_x;  // direction of the line through x carrying the node
  NodeId other;    // its solution neighbor besides x
  int dir_to_other;
};

// Case (II): x is the common solution neighbor of 2-tight u and v, whose
// other solution neighbors y and z differ. Removes {x, y, z}, inserts u, v
// and a maximum independent set of the remaining freed nodes.
class CaseTwo {
 public:
  CaseTwo(const SolutionState& s, NodeId x, const TwoTight& u, const TwoTight& v)
      : s_(s), mis_(s.mis()), x_(x), y_(u.other), z_(v.other), u_(u.node), v_(v.node) {
    lines_[0] = {x, third_dim(u.dir_from_x, v.dir_from_x)};
    std::size_t k = 1;
    for (int f = 0; f < kDims; ++f) {
      if (f != u.dir_to_other) lines_[k++] = {y_, f};
    }
    for (int f = 0; f < kDims; ++f) {
      if (f != v.dir_to_other) lines_[k++] = {z_, f};
    }
  }

  std::optional<Move> evaluate() {
    // Cheap upper bound: number of the five lines holding any candidate.
    int bound = 0;
    for (const Line& l : lines_) bound += line_has_candidate(l);
    if (bound < 2) return std::nullopt;

    std::vector<std::vector<NodeId>> groups(lines_.size());
    std::vector<NodeId> seen;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      for (NodeId w : mis_.line(lines_[i].owner, lines_[i].dir)) {
        if (!candidate(w) || std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
        seen.push_back(w);
        groups[i].push_back(w);
      }
    }
    const auto best = SmallMis(mis_, groups).solve();
    if (best.size() < 2) return std::nullopt;

    Move move;
    move.removals = {x_, y_, z_};
    move.insertions = {u_, v_};
    move.insertions.insert(move.insertions.end(), best.begin(), best.end());
    return move;
  }

 private:
  bool in_r(NodeId w) const { return w == x_ || w == y_ || w == z_; }

  // Freed by removing R and compatible with u and v.
  bool candidate(NodeId w) const {
    if (w == u_ || w == v_ || s_.tightness(w) == 0) return false;
    for (int d = 0; d < kDims; ++d) {
      const NodeId o = s_.solution_neighbor(w, d);
      if (o != kNoNode && !in_r(o)) return false;
    }
    return !mis_.adjacent(w, u_) && !mis_.adjacent(w, v_);
  }

  bool line_has_candidate(const Line& l) const {
    const Triple& lp = mis_.triple(l.owner);

    // 1-tight nodes on the line, minus those at crossings with the lines of
    // u and v (the only ones adjacent to u or v).
    int one_tight = s_.mu(l.owner, l.dir);
    std::array<NodeId, 6> blocked{};
    std::size_t nblocked = 0;
    for (NodeId t : {u_, v_}) {
      for (int f = 0; f < kDims; ++f) {
        const auto p = crossing(lp, l.dir, mis_.triple(t), f);
        if (!p) continue;
        const NodeId w = mis_.node_at(*p);
        if (w == kNoNode || s_.tightness(w) != 1) continue;
        if (std::find(blocked.begin(), blocked.begin() + static_cast<long>(nblocked), w) !=
            blocked.begin() + static_cast<long>(nblocked))
          continue;
        blocked[nblocked++] = w;
        --one_tight;
      }
    }
    if (one_tight > 0) return true;

    // Nodes with two or three solution neighbors in R sit where the line
    // crosses a line of another node of R.
    for (NodeId o : {x_, y_, z_}) {
      if (o == l.owner) continue;
      for (int f = 0; f < kDims; ++f) {
        const auto p = crossing(lp, l.dir, mis_.triple(o), f);
        if (!p) continue;
        const NodeId w = mis_.node_at(*p);
        if (w != kNoNode && s_.tightness(w) >= 2 && candidate(w)) return true;
      }
    }
    return false;
  }

  const SolutionState& s_;
  const MisInstance& mis_;
  NodeId x_, y_, z_, u_, v_;
  std::array<Line, 5> lines_{};
};

}  // namespace

std::optional<Move> search_swap3(const SolutionState& state) {
  detail::require_maximal(state, "search_swap3");
  if (!is_one_maximal(state) || search_swap2(state)) {
    throw PreconditionError("search_swap3: solution is not 2-maximal");
  }

  for (NodeId u : state.non_free_nodes()) {
    if (state.tightness(u) != 3) continue;
    if (auto move = try_three_tight(state, u)) return move;
  }

  const MisInstance& mis = state.mis();
  std::vector<TwoTight> twos;
  for (NodeId x : state.solution()) {
    twos.clear();
    for (int a = 0; a < kDims; ++a) {
      for (NodeId w : mis.line(x, a)) {
        if (w == x || state.tightness(w) != 2) continue;
        for (int e = 0; e < kDims; ++e) {
          const NodeId o = state.solution_neighbor(w, e);
          if (e != a && o != kNoNode) twos.push_back({w, a, o, e});
        }
      }
    }
    for (std::size_t i = 0; i < twos.size(); ++i) {
      for (std::size_t j = i + 1; j < twos.size(); ++j) {
        if (twos[i].dir_from_x == twos[j].dir_from_x || twos[i].other == twos[j].other) continue;
        if (auto move = CaseTwo(state, x, twos[i], twos[j]).evaluate()) return move;
      }
    }
  }
  return std::nullopt;
}

}  // namespace plse

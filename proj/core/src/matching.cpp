#include "plse/matching.hpp"

#include <algorithm>
#include <limits>

#include "plse/errors.hpp"

namespace plse {
namespace {

constexpr int kUnmatched = -1;
constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        adj_start_(static_cast<std::size_t>(g.left_count()) + 1, 0),
        match_left_(static_cast<std::size_t>(g.left_count()), kUnmatched),
        match_right_(static_cast<std::size_t>(g.right_count()), kUnmatched),
        dist_(static_cast<std::size_t>(g.left_count()), kInf),
        cursor_(static_cast<std::size_t>(g.left_count()), 0) {
    const auto& edges = g.edges();
    for (const auto& e : edges) ++adj_start_[static_cast<std::size_t>(e.left) + 1];
    for (std::size_t i = 1; i < adj_start_.size(); ++i) adj_start_[i] += adj_start_[i - 1];
    adj_.resize(edges.size());
    std::vector<std::size_t> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj_[fill[static_cast<std::size_t>(edges[i].left)]++] = static_cast<int>(i);
    }
  }

  void seed(std::span<const std::size_t> initial) {
    const auto& edges = g_.edges();
    for (std::size_t id : initial) {
      if (id >= edges.size()) throw InputError("initial matching: edge index out of range");
      const auto& e = edges[id];
      if (match_left_[static_cast<std::size_t>(e.left)] != kUnmatched ||
          match_right_[static_cast<std::size_t>(e.right)] != kUnmatched) {
        throw InputError("initial matching shares an endpoint");
      }
      match_left_[static_cast<std::size_t>(e.left)] = static_cast<int>(id);
      match_right_[static_cast<std::size_t>(e.right)] = static_cast<int>(id);
    }
  }

  std::vector<std::size_t> run() {
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (int u = 0; u < g_.left_count(); ++u) {
        if (match_left_[static_cast<std::size_t>(u)] == kUnmatched) dfs(u);
      }
    }
    std::vector<std::size_t> result;
    for (int id : match_left_) {
      if (id != kUnmatched) result.push_back(static_cast<std::size_t>(id));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

 private:
  // Layers the left vertices by alternating-path distance from the free
  // ones; true iff some free right vertex is reachable.
  bool bfs() {
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g_.left_count()));
    for (int u = 0; u < g_.left_count(); ++u) {
      if (match_left_[static_cast<std::size_t>(u)] == kUnmatched) {
        dist_[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
      } else {
        dist_[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (std::size_t k = adj_start_[static_cast<std::size_t>(u)];
           k < adj_start_[static_cast<std::size_t>(u) + 1]; ++k) {
        const int r = g_.edges()[static_cast<std::size_t>(adj_[k])].right;
        const int m = match_right_[static_cast<std::size_t>(r)];
        if (m == kUnmatched) {
          found = true;
          continue;
        }
        const int w = g_.edges()[static_cast<std::size_t>(m)].left;
        if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    const auto ui = static_cast<std::size_t>(u);
    for (; adj_start_[ui] + cursor_[ui] < adj_start_[ui + 1]; ++cursor_[ui]) {
      const int id = adj_[adj_start_[ui] + cursor_[ui]];
      const int r = g_.edges()[static_cast<std::size_t>(id)].right;
      const int m = match_right_[static_cast<std::size_t>(r)];
      bool augment = false;
      if (m == kUnmatched) {
        augment = true;
      } else {
        const int w = g_.edges()[static_cast<std::size_t>(m)].left;
        augment = dist_[static_cast<std::size_t>(w)] == dist_[ui] + 1 && dfs(w);
      }
      if (augment) {
        match_left_[ui] = id;
        match_right_[static_cast<std::size_t>(r)] = id;
        ++cursor_[ui];
        return true;
      }
    }
    dist_[ui] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::size_t> adj_start_;
  std::vector<int> adj_;
  std::vector<int> match_left_;   // left vertex -> matched edge id
  std::vector<int> match_right_;  // right vertex -> matched edge id
  std::vector<int> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

BipartiteGraph::BipartiteGraph(int left_count, int right_count)
    : left_count_(left_count), right_count_(right_count) {
  if (left_count < 0 || right_count < 0) throw InputError("negative vertex count");
}

std::size_t BipartiteGraph::add_edge(int left, int right, NodeId payload) {
  if (left < 0 || left >= left_count_ || right < 0 || right >= right_count_) {
    throw InputError("bipartite edge endpoint out of range");
  }
  edges_.push_back({left, right, payload});
  return edges_.size() - 1;
}

std::vector<std::size_t> hopcroft_karp(const BipartiteGraph& g,
                                       std::span<const std::size_t> initial) {
  HopcroftKarp hk(g);
  hk.seed(initial);
  return hk.run();
}

bool is_matching(const BipartiteGraph& g, std::span<const std::size_t> edge_ids) {
  std::vector<char> left(static_cast<std::size_t>(g.left_count()), 0);
  std::vector<char> right(static_cast<std::size_t>(g.right_count()), 0);
  for (std::size_t id : edge_ids) {
    if (id >= g.edges().size()) return false;
    const auto& e = g.edges()[id];
    if (left[static_cast<std::size_t>(e.left)] || right[static_cast<std::size_t>(e.right)]) return false;
    left[static_cast<std::size_t>(e.left)] = right[static_cast<std::size_t>(e.right)] = 1;
  }
  return true;
}

}  // namespace plse

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plse/mis_model.hpp"

namespace plse {

struct BipartiteEdge {
  int left = 0;
  int right = 0;
  NodeId payload = kNoNode;
};

/// Bipartite graph with an edge list kept in insertion order.
class BipartiteGraph {
 public:
  BipartiteGraph(int left_count, int right_count);

  /// Returns the edge index. Throws InputError if an endpoint is out of range.
  std::size_t add_edge(int left, int right, NodeId payload = kNoNode);

  int left_count() const noexcept { return left_count_; }
  int right_count() const noexcept { return right_count_; }
  const std::vector<BipartiteEdge>& edges() const noexcept { return edges_; }

 private:
  int left_count_;
  int right_count_;
  std::vector<BipartiteEdge> edges_;
};

/// Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)).
///
/// Returns indices into g.edges(), sorted. `initial` may hold the indices of
/// a valid matching to start from; phases then only search for augmenting
/// paths relative to it. The result depends only on the edge order and the
/// initial matching.
std::vector<std::size_t> hopcroft_karp(const BipartiteGraph& g,
                                       std::span<const std::size_t> initial = {});

/// True iff no two of the listed edges share an endpoint.
bool is_matching(const BipartiteGraph& g, std::span<const std::size_t> edge_ids);

}  // namespace plse

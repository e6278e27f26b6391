#include <vector>

#include "plse/matching.hpp"
#include "plse/neighborhoods.hpp"
#include "search_detail.hpp"

namespace plse {
namespace {

// Nodes of one facet (coordinate d fixed to k) relevant to its trellis.
struct FacetBuckets {
  std::vector<std::uint32_t> start;  // CSR offsets per facet
  std::vector<NodeId> nodes;
};

// Bucket nodes by facet id d*n + k with a counting pass and a fill pass.
template <class Visit>
FacetBuckets bucket(std::size_t facets, Visit&& visit) {
  FacetBuckets b;
  b.start.assign(facets + 1, 0);
  visit([&](std::size_t f, NodeId) { ++b.start[f + 1]; });
  for (std::size_t f = 1; f <= facets; ++f) b.start[f] += b.start[f - 1];
  b.nodes.resize(b.start[facets]);
  std::vector<std::uint32_t> fill(b.start.begin(), b.start.end() - 1);
  visit([&](std::size_t f, NodeId v) { b.nodes[fill[f]++] = v; });
  return b;
}

}  // namespace

std::optional<Move> search_trellis(const SolutionState& state) {
  detail::require_maximal(state, "search_trellis");
  const MisInstance& mis = state.mis();
  const int n = mis.n();
  const auto facets = static_cast<std::size_t>(3 * n);
  auto facet_of = [n](int d, int k) { return static_cast<std::size_t>(d * n + k); };

  // R: every solution node belongs to one facet per direction.
  const FacetBuckets solution = bucket(facets, [&](auto&& emit) {
    for (NodeId x : state.solution()) {
      const Triple& t = mis.triple(x);
      for (int d = 0; d < kDims; ++d) emit(facet_of(d, t[d]), x);
    }
  });

  // On-facet candidates. A 1-tight node whose solution neighbor lies along
  // direction e shares the two facets not fixing e with that neighbor. A
  // 2-tight node shares exactly one facet with both its neighbors.
  const FacetBuckets candidates = bucket(facets, [&](auto&& emit) {
    for (NodeId w : state.non_free_nodes()) {
      const int tau = state.tightness(w);
      if (tau == 3) continue;
      const Triple& t = mis.triple(w);
      int dirs[2] = {-1, -1};
      int k = 0;
      for (int d = 0; d < kDims; ++d) {
        if (state.solution_neighbor(w, d) != kNoNode) dirs[k++] = d;
      }
      if (tau == 1) {
        for (int d : other_dims(dirs[0])) emit(facet_of(d, t[d]), w);
      } else {
        const int g = third_dim(dirs[0], dirs[1]);
        emit(facet_of(g, t[g]), w);
      }
    }
  });

  std::vector<std::size_t> initial;
  std::vector<NodeId> hanging;
  for (int d = 0; d < kDims; ++d) {
    const auto [p, q] = other_dims(d);
    for (int k = 0; k < n; ++k) {
      const std::size_t f = facet_of(d, k);
      const auto cbegin = candidates.start[f], cend = candidates.start[f + 1];
      // Without on-facet candidates the matching cannot beat R'.
      if (cbegin == cend) continue;

      BipartiteGraph graph(n, n);
      initial.clear();
      hanging.clear();
      // R'' = solution nodes with a 1-tight clique hanging off the facet
      // (mu along d > 0); each such clique contributes one node. R' = R \ R''
      // seeds the matching.
      for (auto i = solution.start[f]; i < solution.start[f + 1]; ++i) {
        const NodeId x = solution.nodes[i];
        if (state.mu(x, d) > 0) {
          hanging.push_back(x);
        } else {
          const Triple& t = mis.triple(x);
          initial.push_back(graph.add_edge(t[p], t[q], x));
        }
      }
      for (auto i = cbegin; i < cend; ++i) {
        const Triple& t = mis.triple(candidates.nodes[i]);
        graph.add_edge(t[p], t[q], candidates.nodes[i]);
      }

      const auto matching = hopcroft_karp(graph, initial);
      if (matching.size() <= initial.size()) continue;

      Move move;
      move.removals.assign(solution.nodes.begin() + solution.start[f],
                           solution.nodes.begin() + solution.start[f + 1]);
      for (std::size_t id : matching) move.insertions.push_back(graph.edges()[id].payload);
      for (NodeId x : hanging) move.insertions.push_back(detail::one_tight_on_line(state, x, d));
      return move;
    }
  }
  return std::nullopt;
}

}  // namespace plse

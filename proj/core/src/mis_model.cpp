#include "plse/mis_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "plse/errors.hpp"

namespace plse {

CellArray::CellArray(int n)
    : n_(n),
      cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
             kNoNode) {}

MisInstance::MisInstance(PlsInstance instance)
    : instance_(std::move(instance)), n_(instance_.n()), cells_(n_) {
  const auto un = static_cast<std::size_t>(n_);
  std::vector<char> cell_used(un * un, 0), row_sym(un * un, 0), col_sym(un * un, 0);
  for (const Triple& t : instance_.given()) {
    cell_used[static_cast<std::size_t>(t.row * n_ + t.col)] = 1;
    row_sym[static_cast<std::size_t>(t.row * n_ + t.sym)] = 1;
    col_sym[static_cast<std::size_t>(t.col * n_ + t.sym)] = 1;
  }

  // A point is in L or N*(L) iff it shares a coordinate pair with some
  // given triple. Enumerating in (row, col, sym) order makes ids independent
  // of the order of L.
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (cell_used[static_cast<std::size_t>(r * n_ + c)]) continue;
      for (int s = 0; s < n_; ++s) {
        if (row_sym[static_cast<std::size_t>(r * n_ + s)] ||
            col_sym[static_cast<std::size_t>(c * n_ + s)])
          continue;
        cells_.set({r, c, s}, static_cast<NodeId>(triples_.size()));
        triples_.push_back({r, c, s});
      }
    }
  }

  const std::size_t line_count = 3 * un * un;
  std::vector<std::uint32_t> counts(line_count + 1, 0);
  line_of_.resize(triples_.size() * kDims);
  for (std::size_t v = 0; v < triples_.size(); ++v) {
    for (int d = 0; d < kDims; ++d) {
      const auto id = line_id(triples_[v], d);
      line_of_[v * kDims + static_cast<std::size_t>(d)] = id;
      ++counts[id + 1];
    }
  }
  for (std::size_t i = 1; i <= line_count; ++i) counts[i] += counts[i - 1];
  line_start_ = counts;
  line_nodes_.resize(triples_.size() * kDims);
  // Nodes are visited in lexicographic order, so each line list comes out
  // sorted by its varying coordinate.
  for (std::size_t v = 0; v < triples_.size(); ++v) {
    for (int d = 0; d < kDims; ++d) {
      line_nodes_[counts[line_of_[v * kDims + static_cast<std::size_t>(d)]]++] =
          static_cast<NodeId>(v);
    }
  }
}

std::uint32_t MisInstance::line_id(const Triple& t, int d) const {
  const auto [a, b] = other_dims(d);
  return static_cast<std::uint32_t>((d * n_ + t[a]) * n_ + t[b]);
}

std::vector<NodeId> MisInstance::neighbors(NodeId v) const {
  if (!valid(v)) throw InputError("invalid node id");
  std::vector<NodeId> out;
  for_each_neighbor(v, [&](NodeId w, int) { out.push_back(w); });
  return out;
}

std::vector<NodeId> MisInstance::line_nodes(NodeId v, int d) const {
  if (!valid(v)) throw InputError("invalid node id");
  if (d < 0 || d >= kDims) throw InputError("direction out of range");
  std::vector<NodeId> out;
  for (NodeId w : line(v, d)) {
    if (w != v) out.push_back(w);
  }
  return out;
}

std::span<const NodeId> MisInstance::line_through(const Triple& point, int d) const {
  const auto id = line_id(point, d);
  return {line_nodes_.data() + line_start_[id], line_nodes_.data() + line_start_[id + 1]};
}

std::vector<Triple> MisInstance::triples_of(std::span<const NodeId> nodes) const {
  std::vector<Triple> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(triple(v));
  return out;
}

bool validate_extension(const PlsInstance& instance, std::span<const Triple> s) {
  const int n = instance.n();
  for (const Triple& t : s) {
    for (int d = 0; d < kDims; ++d) {
      if (t[d] < 0 || t[d] >= n) throw InputError("triple out of range");
    }
  }

  // Graph side: S must be a subset of V_L and independent in G_L.
  const MisInstance mis(instance);
  bool graph_ok = true;
  std::unordered_set<NodeId> ids;
  for (const Triple& t : s) {
    const NodeId v = mis.node_at(t);
    if (v == kNoNode || !ids.insert(v).second) {
      graph_ok = false;
      break;
    }
  }
  if (graph_ok) {
    for (NodeId v : ids) {
      mis.for_each_neighbor(v, [&](NodeId w, int) {
        if (ids.contains(w)) graph_ok = false;
      });
      if (!graph_ok) break;
    }
  }

  // PLS side: L u S is a PLS set and S is disjoint from L.
  std::vector<Triple> merged(instance.given());
  merged.insert(merged.end(), s.begin(), s.end());
  const bool pls_ok = is_pls_set(n, merged);

  if (graph_ok != pls_ok) {
    throw std::logic_error("graph-side and PLS-side extension checks disagree");
  }
  return graph_ok;
}

}  // namespace plse

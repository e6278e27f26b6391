#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "plse/pls.hpp"
#include "plse/triple.hpp"

namespace plse {

/// Dense handle of a node of the transformed graph, in [0, node_count).
using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// The n x n x n occupancy table: each point of the cube maps to the node
/// placed there, or kNoNode when the triple is excluded by the pre-assignment.
class CellArray {
 public:
  CellArray() = default;
  explicit CellArray(int n);

  int n() const noexcept { return n_; }

  NodeId at(const Triple& t) const { return cells_[index(t)]; }
  NodeId at(int row, int col, int sym) const { return at(Triple{row, col, sym}); }
  void set(const Triple& t, NodeId id) { cells_[index(t)] = id; }

  bool contains(const Triple& t) const {
    return t.row >= 0 && t.row < n_ && t.col >= 0 && t.col < n_ && t.sym >= 0 && t.sym < n_;
  }

 private:
  std::size_t index(const Triple& t) const {
    return (static_cast<std::size_t>(t.row) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(t.col)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(t.sym);
  }

  int n_ = 0;
  std::vector<NodeId> cells_;
};

/// Graph G_L of a PLS instance L: nodes are the triples that can still be
/// added (V_L = [n]^3 minus L and everything at distance 1 from L), and two
/// nodes are adjacent iff they lie on a common grid line. Edges are never
/// stored; adjacency comes from the cell array and per-line node lists.
///
/// Immutable after construction.
class MisInstance {
 public:
  explicit MisInstance(PlsInstance instance);

  int n() const noexcept { return n_; }
  std::size_t node_count() const noexcept { return triples_.size(); }
  const PlsInstance& instance() const noexcept { return instance_; }
  const CellArray& cells() const noexcept { return cells_; }

  const Triple& triple(NodeId v) const { return triples_[static_cast<std::size_t>(v)]; }

  /// Node at the point, or kNoNode if the point is outside the cube or not in V_L.
  NodeId node_at(const Triple& t) const { return cells_.contains(t) ? cells_.at(t) : kNoNode; }

  bool valid(NodeId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < triples_.size();
  }

  /// Nodes on the direction-d grid line through v, v included, in
  /// increasing order of coordinate d.
  std::span<const NodeId> line(NodeId v, int d) const {
    const std::uint32_t id = line_of_[static_cast<std::size_t>(v) * kDims + static_cast<std::size_t>(d)];
    return {line_nodes_.data() + line_start_[id], line_nodes_.data() + line_start_[id + 1]};
  }

  /// Calls f(w, d) for every neighbor w of v; d is the direction of the
  /// shared grid line.
  template <class F>
  void for_each_neighbor(NodeId v, F&& f) const {
    for (int d = 0; d < kDims; ++d) {
      for (NodeId w : line(v, d)) {
        if (w != v) f(w, d);
      }
    }
  }

  /// All neighbors of v (throws InputError for an invalid id).
  std::vector<NodeId> neighbors(NodeId v) const;

  /// Nodes of V_L on the direction-d line through v, excluding v.
  std::vector<NodeId> line_nodes(NodeId v, int d) const;

  /// Nodes currently on the given line of the cube, identified by a point on it.
  std::span<const NodeId> line_through(const Triple& point, int d) const;

  bool adjacent(NodeId v, NodeId w) const {
    return hamming_distance(triple(v), triple(w)) == 1;
  }

  std::vector<Triple> triples_of(std::span<const NodeId> nodes) const;

 private:
  std::uint32_t line_id(const Triple& t, int d) const;

  PlsInstance instance_;
  int n_;
  CellArray cells_;
  std::vector<Triple> triples_;
  std::vector<std::uint32_t> line_of_;     // node*3 + d -> line id
  std::vector<std::uint32_t> line_start_;  // CSR offsets, 3n^2 + 1 entries
  std::vector<NodeId> line_nodes_;
};

/// Checks that S extends the instance, two ways: S is an independent set of
/// G_L, and L u S is a PLS set. Throws std::logic_error if the two checks
/// disagree.
bool validate_extension(const PlsInstance& instance, std::span<const Triple> s);

}  // namespace plse

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>

namespace plse {

/// Number of grid directions (row, column, symbol).
inline constexpr int kDims = 3;

/// A point of the n x n x n cube: symbol `sym` placed at cell (`row`, `col`).
///
/// Coordinates are zero-based in memory (0..n-1). The text formats use
/// 1-based symbols; conversion happens only at the I/O boundary.
struct Triple {
  int row = 0;
  int col = 0;
  int sym = 0;

  constexpr int operator[](int d) const { return d == 0 ? row : (d == 1 ? col : sym); }
  constexpr int& operator[](int d) { return d == 0 ? row : (d == 1 ? col : sym); }

  constexpr auto operator<=>(const Triple&) const = default;
};

/// Number of coordinates in which `v` and `w` differ.
constexpr int hamming_distance(const Triple& v, const Triple& w) {
  return (v.row != w.row) + (v.col != w.col) + (v.sym != w.sym);
}

/// The two directions other than `d`, in increasing order.
constexpr std::array<int, 2> other_dims(int d) {
  return d == 0 ? std::array<int, 2>{1, 2}
                : (d == 1 ? std::array<int, 2>{0, 2} : std::array<int, 2>{0, 1});
}

constexpr int third_dim(int a, int b) { return 3 - a - b; }

}  // namespace plse

template <>
struct std::hash<plse::Triple> {
  std::size_t operator()(const plse::Triple& t) const noexcept {
    return (static_cast<std::size_t>(t.row) * 1315423911u) ^
           (static_cast<std::size_t>(t.col) * 2654435761u) ^ static_cast<std::size_t>(t.sym);
  }
};

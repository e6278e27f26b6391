#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plse/triple.hpp"

namespace plse {

/// True iff every pair of triples is at Hamming distance >= 2, i.e. the
/// triples satisfy the Latin square condition. Duplicate entries count as a
/// violation. Throws InputError if a coordinate lies outside [0, n).
bool is_pls_set(int n, std::span<const Triple> triples);

/// True iff no triple of `s` is within distance 1 of a triple of `l`.
/// Both sets must be disjoint; a shared triple throws InputError.
bool are_compatible(std::span<const Triple> s, std::span<const Triple> l);

/// A partial Latin square: the pre-assigned triples L on an n x n grid.
class PlsInstance {
 public:
  /// Empty grid of order n (n >= 2).
  explicit PlsInstance(int n);

  /// Validates and stores `given`. Throws ParseError with kind
  /// kDuplicateCell or kLatinViolation, or InputError for out-of-range data.
  PlsInstance(int n, std::vector<Triple> given);

  int n() const noexcept { return n_; }

  /// Given triples in (row, col) order.
  const std::vector<Triple>& given() const noexcept { return given_; }
  std::size_t size() const noexcept { return given_.size(); }

  /// Symbol at the cell, if assigned.
  std::optional<int> symbol_at(int row, int col) const;

  /// Number of cells still empty.
  std::size_t empty_cells() const noexcept {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) - given_.size();
  }

  bool operator==(const PlsInstance& other) const = default;

 private:
  int n_;
  std::vector<Triple> given_;
  std::vector<int> grid_;  // n*n, -1 for empty
};

}  // namespace plse

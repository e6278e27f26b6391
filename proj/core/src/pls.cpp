#include "plse/pls.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>

#include "plse/errors.hpp"

namespace plse {
namespace {

void check_range(int n, const Triple& t) {
  for (int d = 0; d < kDims; ++d) {
    if (t[d] < 0 || t[d] >= n) {
      std::ostringstream os;
      os << "triple (" << t.row + 1 << "," << t.col + 1 << "," << t.sym + 1
         << ") out of range for n=" << n;
      throw InputError(os.str());
    }
  }
}

}  // namespace

bool is_pls_set(int n, std::span<const Triple> triples) {
  if (n < 1) throw InputError("grid order must be positive");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  // Two triples are within distance 1 iff they agree on some pair of
  // coordinates, so one occupancy table per coordinate pair suffices.
  std::vector<char> cell(nn, 0), row_sym(nn, 0), col_sym(nn, 0);
  for (const Triple& t : triples) check_range(n, t);
  for (const Triple& t : triples) {
    auto& a = cell[static_cast<std::size_t>(t.row * n + t.col)];
    auto& b = row_sym[static_cast<std::size_t>(t.row * n + t.sym)];
    auto& c = col_sym[static_cast<std::size_t>(t.col * n + t.sym)];
    if (a || b || c) return false;
    a = b = c = 1;
  }
  return true;
}

bool are_compatible(std::span<const Triple> s, std::span<const Triple> l) {
  std::unordered_set<Triple> in_l(l.begin(), l.end());
  for (const Triple& v : s) {
    if (in_l.contains(v)) throw InputError("compatibility is defined for disjoint sets only");
  }
  for (const Triple& v : s) {
    for (const Triple& w : l) {
      if (hamming_distance(v, w) < 2) return false;
    }
  }
  return true;
}

PlsInstance::PlsInstance(int n) : n_(n), grid_() {
  if (n < 2) throw InputError("grid order must be at least 2");
  grid_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
}

PlsInstance::PlsInstance(int n, std::vector<Triple> given) : PlsInstance(n) {
  for (const Triple& t : given) check_range(n, t);
  std::sort(given.begin(), given.end());
  for (const Triple& t : given) {
    int& slot = grid_[static_cast<std::size_t>(t.row * n + t.col)];
    if (slot >= 0) {
      throw ParseError(ParseError::Kind::kDuplicateCell,
                       "cell (" + std::to_string(t.row + 1) + "," + std::to_string(t.col + 1) +
                           ") assigned twice");
    }
    slot = t.sym;
  }
  if (!is_pls_set(n, given)) {
    throw ParseError(ParseError::Kind::kLatinViolation,
                     "given triples violate the Latin square condition");
  }
  given_ = std::move(given);
}

std::optional<int> PlsInstance::symbol_at(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) throw InputError("cell out of range");
  const int s = grid_[static_cast<std::size_t>(row * n_ + col)];
  if (s < 0) return std::nullopt;
  return s;
}

}  // namespace plse

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "plse/pls.hpp"
#include "plse/random.hpp"

namespace plse {

enum class Scheme { kQC, kQWH };

/// Parameters for random benchmark instances.
struct GenScheme {
  Scheme scheme = Scheme::kQC;
  double ratio = 0.5;  // pre-assignment ratio r in [0, 1]
  std::uint64_t seed = 0;
};

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);  // "qc" / "qwh", case-insensitive

/// floor(n^2 r), robust against r values that are not exactly representable.
std::size_t assigned_cell_count(int n, double ratio);

/// Complete Latin square of order n: the cyclic square (i + j) mod n with
/// independent uniform row, column and symbol permutations applied.
std::vector<Triple> random_latin_square(int n, Rng& rng);
std::vector<Triple> random_latin_square(int n, std::uint64_t seed);

/// Quasigroup completion: starting from the empty grid, repeatedly place a
/// (cell, symbol) pair drawn uniformly from the currently feasible pairs
/// until floor(n^2 r) cells are filled. Dead ends restart with a derived
/// sub-seed; after `max_restarts` failures throws GenerationError.
PlsInstance generate_qc(int n, double ratio, std::uint64_t seed, int max_restarts = 100);

struct QwhInstance {
  PlsInstance instance;
  std::vector<Triple> square;  // the complete square the holes were punched in
};

/// Quasigroup with holes: a random Latin square with n^2 - floor(n^2 r)
/// uniformly chosen cells emptied. Always completable.
QwhInstance generate_qwh_with_square(int n, double ratio, std::uint64_t seed);
PlsInstance generate_qwh(int n, double ratio, std::uint64_t seed);

PlsInstance generate(int n, const GenScheme& scheme);

}  // namespace plse

#include "plse/generate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "plse/errors.hpp"

namespace plse {
namespace {

void check_args(int n, double ratio) {
  if (n < 2) throw InputError("grid order must be at least 2");
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw InputError("ratio must lie in [0, 1]");
}

// One QC attempt. Returns false on a dead end.
bool try_qc(int n, std::size_t target, Rng& rng, std::vector<Triple>& out) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<char> row_used(un * un, 0), col_used(un * un, 0), filled(un * un, 0);
  // avail[cell] = number of symbols still placeable at the cell.
  std::vector<int> avail(un * un, n);
  std::size_t feasible = un * un * un;
  out.clear();

  while (out.size() < target) {
    if (feasible == 0) return false;
    std::size_t pick = uniform_index(rng, feasible);
    std::size_t cell = 0;
    while (pick >= static_cast<std::size_t>(avail[cell])) {
      pick -= static_cast<std::size_t>(avail[cell]);
      ++cell;
    }
    const int row = static_cast<int>(cell / un);
    const int col = static_cast<int>(cell % un);
    int sym = 0;
    for (;; ++sym) {
      if (row_used[static_cast<std::size_t>(row * n + sym)] ||
          col_used[static_cast<std::size_t>(col * n + sym)])
        continue;
      if (pick == 0) break;
      --pick;
    }

    out.push_back({row, col, sym});
    feasible -= static_cast<std::size_t>(avail[cell]);
    avail[cell] = 0;
    filled[cell] = 1;
    row_used[static_cast<std::size_t>(row * n + sym)] = 1;
    col_used[static_cast<std::size_t>(col * n + sym)] = 1;
    // The symbol is no longer placeable in the rest of this row and column.
    for (int k = 0; k < n; ++k) {
      const auto in_row = static_cast<std::size_t>(row * n + k);
      if (!filled[in_row] && !col_used[static_cast<std::size_t>(k * n + sym)]) {
        --avail[in_row];
        --feasible;
      }
      const auto in_col = static_cast<std::size_t>(k * n + col);
      if (!filled[in_col] && !row_used[static_cast<std::size_t>(k * n + sym)]) {
        --avail[in_col];
        --feasible;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view scheme_name(Scheme s) { return s == Scheme::kQC ? "qc" : "qwh"; }

Scheme parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "qc") return Scheme::kQC;
  if (lower == "qwh") return Scheme::kQWH;
  throw InputError("unknown generation scheme '" + std::string(name) + "'");
}

std::size_t assigned_cell_count(int n, double ratio) {
  const double cells = static_cast<double>(n) * static_cast<double>(n);
  return static_cast<std::size_t>(std::floor(cells * ratio + 1e-9));
}

std::vector<Triple> random_latin_square(int n, Rng& rng) {
  if (n < 2) throw InputError("grid order must be at least 2");
  std::vector<int> rows(static_cast<std::size_t>(n)), cols(rows.size()), syms(rows.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(syms.begin(), syms.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(syms.begin(), syms.end(), rng);

  std::vector<Triple> square;
  square.reserve(rows.size() * rows.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      square.push_back({rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)],
                        syms[static_cast<std::size_t>((i + j) % n)]});
    }
  }
  std::sort(square.begin(), square.end());
  return square;
}

std::vector<Triple> random_latin_square(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_latin_square(n, rng);
}

PlsInstance generate_qc(int n, double ratio, std::uint64_t seed, int max_restarts) {
  check_args(n, ratio);
  const std::size_t target = assigned_cell_count(n, ratio);
  std::vector<Triple> given;
  for (int attempt = 0; attempt <= max_restarts; ++attempt) {
    Rng rng(attempt == 0 ? seed : mix_seed(seed + static_cast<std::uint64_t>(attempt)));
    if (try_qc(n, target, rng, given)) return PlsInstance(n, std::move(given));
  }
  throw GenerationError("QC generation hit a dead end " + std::to_string(max_restarts + 1) +
                        " times (n=" + std::to_string(n) + ", r=" + std::to_string(ratio) + ")");
}

QwhInstance generate_qwh_with_square(int n, double ratio, std::uint64_t seed) {
  check_args(n, ratio);
  Rng rng(seed);
  std::vector<Triple> square = random_latin_square(n, rng);
  std::vector<Triple> kept = square;
  std::shuffle(kept.begin(), kept.end(), rng);
  kept.resize(assigned_cell_count(n, ratio));
  return {PlsInstance(n, std::move(kept)), std::move(square)};
}

PlsInstance generate_qwh(int n, double ratio, std::uint64_t seed) {
  return generate_qwh_with_square(n, ratio, seed).instance;
}

PlsInstance generate(int n, const GenScheme& scheme) {
  return scheme.scheme == Scheme::kQC ? generate_qc(n, scheme.ratio, scheme.seed)
                                      : generate_qwh(n, scheme.ratio, scheme.seed);
}

}  // namespace plse

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "plse/pls.hpp"

namespace plse {

// ".pls" grid format:
//   line 1       n
//   lines 2..n+1 n space-separated integers in 0..n (0 = empty cell,
//                k > 0 = symbol k)
// A trailing newline is required. Solution files use the same format.

/// A grid exactly as written: cells[row * n + col] in 0..n, 0 = empty.
/// No Latin-square check.
struct Grid {
  int n = 0;
  std::vector<int> cells;

  int at(int row, int col) const { return cells[static_cast<std::size_t>(row * n + col)]; }
  std::vector<Triple> triples() const;  // 0-based symbols
};

/// Syntax and range checks only (ParseError kMalformed).
Grid parse_grid(std::string_view text);

/// Throws ParseError: kMalformed for syntax/range problems, kLatinViolation
/// if a symbol repeats in a row or column.
PlsInstance parse_instance(std::string_view text);
std::string serialize_instance(const PlsInstance& instance);

std::string read_text_file(const std::filesystem::path& path);
PlsInstance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const PlsInstance& instance);

}  // namespace plse

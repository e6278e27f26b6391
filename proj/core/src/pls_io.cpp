#include "plse/pls_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "plse/errors.hpp"

namespace plse {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(ParseError::Kind::kMalformed, what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) malformed("missing trailing newline");
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long v = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      malformed("line " + std::to_string(line_no) + ": expected integers");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

Grid parse_grid(std::string_view text) {
  if (text.empty()) malformed("empty input");
  const auto lines = split_lines(text);

  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 1) malformed("line 1: expected the grid order n");
  if (header[0] < 2 || header[0] > 4096) malformed("line 1: grid order out of range");
  const int n = static_cast<int>(header[0]);
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    malformed("expected " + std::to_string(n) + " grid rows, found " +
              std::to_string(lines.size() - 1));
  }

  Grid grid{n, std::vector<int>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)};
  for (int row = 0; row < n; ++row) {
    const auto line_no = static_cast<std::size_t>(row) + 2;
    const auto values = parse_ints(lines[line_no - 1], line_no);
    if (values.size() != static_cast<std::size_t>(n)) {
      malformed("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                " entries");
    }
    for (int col = 0; col < n; ++col) {
      const long v = values[static_cast<std::size_t>(col)];
      if (v < 0 || v > n) {
        malformed("line " + std::to_string(line_no) + ": symbol " + std::to_string(v) +
                  " out of range");
      }
      grid.cells[static_cast<std::size_t>(row * n + col)] = static_cast<int>(v);
    }
  }
  return grid;
}

std::vector<Triple> Grid::triples() const {
  std::vector<Triple> out;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (const int v = at(row, col); v > 0) out.push_back({row, col, v - 1});
    }
  }
  return out;
}

PlsInstance parse_instance(std::string_view text) {
  const Grid grid = parse_grid(text);
  return PlsInstance(grid.n, grid.triples());
}

std::string serialize_instance(const PlsInstance& instance) {
  const int n = instance.n();
  std::ostringstream os;
  os << n << '\n';
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      if (col > 0) os << ' ';
      const auto s = instance.symbol_at(row, col);
      os << (s ? *s + 1 : 0);
    }
    os << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PlsInstance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

void write_instance_file(const std::filesystem::path& path, const PlsInstance& instance) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize_instance(instance);
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace plse

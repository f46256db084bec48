#include "mperturb/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mperturb/error.hpp"

namespace mperturb {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line.
  std::optional<Line> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      const auto first = raw.find_first_not_of(" \t");
      if (first == std::string::npos || raw[first] == '#') continue;
      Line line;
      line.number = number_;
      tokenize(raw, line.tokens);
      return line;
    }
    return std::nullopt;
  }

  std::size_t last_line() const noexcept { return number_; }

 private:
  static void tokenize(std::string_view rest, std::vector<std::string>& tokens) {
    while (true) {
      const auto b = rest.find_first_not_of(" \t");
      if (b == std::string_view::npos) break;
      rest.remove_prefix(b);
      const auto e = rest.find_first_of(" \t");
      tokens.emplace_back(rest.substr(0, e));
      if (e == std::string_view::npos) break;
      rest.remove_prefix(e);
    }
  }

  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a real number, got '" + std::string(tok) + "'");
  }
  if (!std::isfinite(value)) throw ParseError(line, "non-finite value '" + std::string(tok) + "'");
  return value;
}

void expect_end(LineReader& reader, const char* what) {
  if (auto extra = reader.next()) {
    throw ParseError(extra->number, std::string("unexpected extra line after ") + what);
  }
}

Matrix read_dense_body(LineReader& reader, std::size_t n) {
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(reader.last_line(), "expected " + std::to_string(n) + " rows, found " +
                                               std::to_string(i));
    }
    if (line->tokens.size() != n) {
      throw ParseError(line->number, "expected " + std::to_string(n) + " values, found " +
                                         std::to_string(line->tokens.size()));
    }
    for (const auto& tok : line->tokens) entries.push_back(parse_real(tok, line->number));
  }
  expect_end(reader, "the last matrix row");
  return Matrix::from_row_major(n, std::move(entries));
}

Matrix read_coordinate_body(LineReader& reader, std::size_t n, std::size_t nnz) {
  Matrix a(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < nnz; ++k) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(reader.last_line(), "expected " + std::to_string(nnz) +
                                               " entries, found " + std::to_string(k));
    }
    if (line->tokens.size() != 3) throw ParseError(line->number, "expected 'i j value'");
    const std::size_t i = parse_count(line->tokens[0], line->number, "row index");
    const std::size_t j = parse_count(line->tokens[1], line->number, "column index");
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError(line->number, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") outside 1.." + std::to_string(n));
    }
    if (!seen.emplace(i, j).second) {
      throw ParseError(line->number, "duplicate entry (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
    }
    a(i - 1, j - 1) = parse_real(line->tokens[2], line->number);
  }
  expect_end(reader, "the last coordinate entry");
  return a;
}

}  // namespace

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  if (name == "dense") return MatrixFormat::Dense;
  if (name == "coord" || name == "coordinate") return MatrixFormat::Coordinate;
  return std::nullopt;
}

Matrix read_matrix(std::istream& in, std::optional<MatrixFormat> format) {
  LineReader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError(reader.last_line(), "empty matrix file");

  const MatrixFormat fmt =
      format.value_or(header->tokens.size() == 2 ? MatrixFormat::Coordinate : MatrixFormat::Dense);
  const std::size_t want = fmt == MatrixFormat::Dense ? 1 : 2;
  if (header->tokens.size() != want) {
    throw ParseError(header->number, fmt == MatrixFormat::Dense
                                         ? "dense header must be a single integer 'n'"
                                         : "coordinate header must be 'n nnz'");
  }
  const std::size_t n = parse_count(header->tokens[0], header->number, "n");
  if (n == 0) throw ParseError(header->number, "matrix dimension must be positive");

  if (fmt == MatrixFormat::Dense) return read_dense_body(reader, n);
  const std::size_t nnz = parse_count(header->tokens[1], header->number, "nnz");
  if (nnz > n * n) throw ParseError(header->number, "nnz exceeds n*n");
  return read_coordinate_body(reader, n, nnz);
}

Matrix read_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_matrix(in, format);
}

namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_dense(std::ostream& out, const Matrix& a) {
  out << a.size() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? " " : "") << format_real(a(i, j));
    out << '\n';
  }
}

void write_coordinate(std::ostream& out, const Matrix& a) {
  std::size_t nnz = 0;
  for (double x : a.entries()) nnz += x != 0.0;
  out << a.size() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != 0.0) out << i + 1 << ' ' << j + 1 << ' ' << format_real(a(i, j)) << '\n';
}

}  // namespace mperturb

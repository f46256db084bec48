#include "mperturb/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "mperturb/error.hpp"

namespace mperturb {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::UpdateSingular: return "UpdateSingular";
    case ErrorKind::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorKind::ZeroMarginal: return "ZeroMarginal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyPerturbation: return "EmptyPerturbation";
    case ErrorKind::UnreachablePair: return "UnreachablePair";
    case ErrorKind::NotTridiagonal: return "NotTridiagonal";
    case ErrorKind::BandwidthViolation: return "BandwidthViolation";
    case ErrorKind::SingularSubmatrix: return "SingularSubmatrix";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NegativePerturbation: return "NegativePerturbation";
    case ErrorKind::SingularIterate: return "SingularIterate";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
  }
  return "Unknown";
}

Matrix::Matrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) {
      throw Error(ErrorKind::InvalidMatrix, "matrix must be square, got a row of length " +
                                                std::to_string(r.size()) + " in a " +
                                                std::to_string(n_) + "-row matrix");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw Error(ErrorKind::InvalidMatrix, "non-finite entry");
}

Matrix Matrix::from_row_major(std::size_t n, std::vector<double> entries) {
  if (entries.size() != n * n) {
    throw Error(ErrorKind::InvalidMatrix, "expected " + std::to_string(n * n) + " entries, got " +
                                              std::to_string(entries.size()));
  }
  Matrix m;
  m.n_ = n;
  m.data_ = std::move(entries);
  if (!m.all_finite()) throw Error(ErrorKind::InvalidMatrix, "non-finite entry");
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(std::size_t n) { return Matrix(n, 1.0); }

Matrix Matrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  if (row >= n || col >= n) throw Error(ErrorKind::IndexOutOfRange, "unit matrix index");
  Matrix m(n);
  m(row, col) = 1.0;
  return m;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::min_entry() const noexcept {
  assert(!data_.empty());
  return *std::min_element(data_.begin(), data_.end());
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Vector Matrix::row_sums() const {
  Vector r(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j);
  return r;
}

Vector Matrix::col_sums() const {
  Vector c(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) c[j] += (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::principal(std::span<const std::size_t> indices) const {
  Matrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) sub(a, b) = (*this)(indices[a], indices[b]);
  return sub;
}

Matrix Matrix::principal_range(std::size_t first, std::size_t last) const {
  if (first > last || last >= n_) throw Error(ErrorKind::IndexOutOfRange, "principal range");
  std::vector<std::size_t> idx;
  for (std::size_t i = first; i <= last; ++i) idx.push_back(i);
  return principal(idx);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
  return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

}  // namespace mperturb

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mperturb {

using Vector = std::vector<double>;

// Square, dense, row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0);

  // Throws Error(InvalidMatrix) if rows are ragged, not square, or hold
  // non-finite values.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_row_major(std::size_t n, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t n);
  // Single 1 at (row, col), zeros elsewhere.
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> entries() const noexcept { return data_; }

  double max_abs() const noexcept;
  double min_entry() const noexcept;
  bool all_finite() const noexcept;

  Vector row_sums() const;
  Vector col_sums() const;
  Matrix transpose() const;

  // Principal submatrix on the given (0-based) indices, in the given order.
  Matrix principal(std::span<const std::size_t> indices) const;
  // Principal submatrix on the contiguous range [first, last].
  Matrix principal_range(std::size_t first, std::size_t last) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s) noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace mperturb

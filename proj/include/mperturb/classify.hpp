#pragma once

// Structural predicates on matrices: Z/M-matrix, monotonicity, diagonal
// dominance, irreducibility, quasi-double-stochasticity, and the Kuttler and
// Gavrilov monotonicity certificates.

#include <cstddef>
#include <vector>

#include "mperturb/matrix.hpp"

namespace mperturb {

inline constexpr double kDefaultMonotoneTol = 1e-10;
inline constexpr double kDefaultStochasticTol = 1e-10;

// Result of a monotonicity test. The witness is the smallest entry of A^{-1}
// (lowest row-major position on ties). For singular A, singular is set and
// the witness is meaningless.
struct MonotoneCheck {
  bool monotone = false;
  bool singular = false;
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  explicit operator bool() const noexcept { return monotone; }
};

struct ClassificationReport {
  bool is_z_matrix = false;
  bool is_m_matrix = false;
  bool is_monotone = false;
  bool is_strictly_diag_dominant = false;
  bool is_irreducibly_diag_dominant = false;
  bool is_irreducible = false;
  bool is_quasi_doubly_stochastic = false;
  // sigma_i = sum_{j != i} |a_ij| / |a_ii|; +inf where a_ii = 0.
  Vector sigma;
  // Indices (0-based) with sigma_i < 1.
  std::vector<std::size_t> strict_set;
  MonotoneCheck monotone_witness;
};

// Throws ZeroDiagonal.
Vector sigma_vector(const Matrix& a);

// A^{-1} >= -tol * max|A^{-1}| entrywise.
MonotoneCheck is_monotone(const Matrix& a, double tol = kDefaultMonotoneTol);
// Overload when the inverse is already at hand.
MonotoneCheck check_inverse_nonnegative(const Matrix& inv, double tol = kDefaultMonotoneTol);

bool is_z_matrix(const Matrix& a);
// Nonsingular M-matrix: Z-pattern and monotone.
bool is_m_matrix(const Matrix& a, double tol = kDefaultMonotoneTol);
bool is_irreducible(const Matrix& a);
bool is_strictly_diag_dominant(const Matrix& a);
bool is_irreducibly_diag_dominant(const Matrix& a);
bool is_quasi_doubly_stochastic(const Matrix& a, double tol = kDefaultStochasticTol);
bool is_symmetric(const Matrix& a, double tol = 1e-12);
bool is_tridiagonal(const Matrix& a);

// Kuttler's criterion: M monotone, M >= A, w > 0 (nonnegative, not zero) and
// A w >> 0. A true result certifies that A is monotone. Throws
// DimensionMismatch.
bool verify_kuttler(const Matrix& a, const Matrix& m, std::span<const double> w,
                    double tol = kDefaultMonotoneTol);

// Gavrilov's criterion: A positive definite and every order-m principal
// submatrix monotone. Enumerates all C(n, m) subsets. Throws NotSymmetric
// and OrderOutOfRange (requires 2 <= m < n).
bool gavrilov_check(const Matrix& a, std::size_t order, double tol = kDefaultMonotoneTol);

// All leading principal minors strictly positive.
bool is_positive_definite(const Matrix& a);

ClassificationReport classify(const Matrix& a, double tol = kDefaultMonotoneTol);

}  // namespace mperturb

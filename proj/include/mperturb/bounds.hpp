#pragma once

// Closed-form monotonicity-preserving perturbation bounds for M-matrices.
//
// Every bound reports whether the hypotheses of the underlying result hold
// (preconditions_ok) instead of refusing to evaluate; a value computed with
// preconditions_ok == false carries no guarantee.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mperturb/matrix.hpp"

namespace mperturb {

// 1 - B_A * Sigma at or below this is treated as zero: the bound is +inf.
inline constexpr double kMainDenominatorTol = 1e-12;
// |r_i| or |c_j| at or below this makes B_A undefined.
inline constexpr double kMarginalTol = 1e-14;

// A^{-1} and the quantities derived from it.
struct InverseStats {
  Matrix inv;
  Vector r;                  // row sums of A^{-1}
  Vector c;                  // column sums of A^{-1}
  double sigma_total = 0.0;  // sum of all entries of A^{-1}
  // min_ij b_ij / (r_i c_j), attained at (argmin_row, argmin_col).
  double buffoni_number = 0.0;
  std::size_t argmin_row = 0;
  std::size_t argmin_col = 0;
};

enum class BoundMethod { Main, Corollary, Bouchon, Tridiagonal };
enum class BoundKind {
  Componentwise,  // |E| <= value entrywise
  InfNorm,        // ||E||_inf < value (strict)
  SingleEntry,    // h <= value for E = h E_lk, sharp
};

std::string_view to_string(BoundMethod m) noexcept;
std::string_view to_string(BoundKind k) noexcept;

struct BoundResult {
  double value = 0.0;  // >= 0, may be +inf
  BoundMethod method = BoundMethod::Main;
  BoundKind kind = BoundKind::Componentwise;
  bool preconditions_ok = false;
  std::string precondition_detail;
  // Named intermediate quantities, e.g. {"eta", 8.0}.
  std::vector<std::pair<std::string, double>> terms;

  double term(std::string_view name) const;
};

// Throws SingularMatrix, ZeroMarginal.
InverseStats inverse_stats(const Matrix& a);

// (det(A + J) - det(A)) / det(A). Throws SingularMatrix.
double sigma_via_determinant(const Matrix& a);

// B_A / (1 - B_A Sigma); hypotheses: strictly diagonally dominant M-matrix.
BoundResult main_bound(const Matrix& a, double tol = 1e-10);
BoundResult main_bound(const Matrix& a, const InverseStats& stats, double tol = 1e-10);

// m / (1 - m n), m = min entry of A^{-1}; hypotheses: quasi-doubly-stochastic
// M-matrix.
BoundResult corollary_bound(const Matrix& a, double tol = 1e-10);

// m(A) = min_i |a_ii|
double min_abs_diagonal(const Matrix& a);
// eta(A) = max over a_ij != 0 of |a_ii| / |a_ij|
double eta(const Matrix& a);

// C(A,E) m(A) with C = 1 / (eta^M M e). Strict bound on ||E||_inf.
// Hypotheses: irreducibly diagonally dominant M-matrix and E 1 >= 0.
// Throws EmptyPerturbation, UnreachablePair.
BoundResult bouchon_bound(const Matrix& a, const Matrix& e_pattern, double tol = 1e-10);

// Exact threshold on h for A + h E_{l,k}, A tridiagonal, |l - k| >= 2
// (0-based l, k). Throws NotTridiagonal, BandwidthViolation,
// SingularSubmatrix, IndexOutOfRange.
BoundResult tridiagonal_bound(const Matrix& a, std::size_t l, std::size_t k, double tol = 1e-10);

// Determinant of the principal submatrix on [first, last] of a tridiagonal
// matrix by the three-term recurrence.
double tridiagonal_principal_det(const Matrix& a, std::size_t first, std::size_t last);

}  // namespace mperturb

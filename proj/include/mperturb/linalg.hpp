#pragma once

// Dense LU with partial pivoting and the routines built on it.
//
// Pivot selection takes the largest-magnitude candidate in the column; ties go
// to the lowest row index, so factors are reproducible bit for bit. No
// iterative refinement is done: these routines target desk-scale problems
// (n up to a few hundred).

#include <cstddef>
#include <span>
#include <vector>

#include "mperturb/matrix.hpp"

namespace mperturb {

// A pivot is treated as zero when |pivot| <= kSingularRelTol * max|a_ij|.
inline constexpr double kSingularRelTol = 1e-14;
// Sherman-Morrison denominators with magnitude <= this are rejected.
inline constexpr double kUpdateDenominatorTol = 1e-14;

struct LUFactors {
  Matrix lower;                   // unit lower triangular
  Matrix upper;
  std::vector<std::size_t> perm;  // row i of PA is row perm[i] of A
  int sign = 1;                   // determinant of P
};

LUFactors lu_factor(const Matrix& a);

Vector lu_solve(const LUFactors& lu, std::span<const double> rhs);

Matrix inverse(const Matrix& a);

// Never throws on singular input; the result is then zero or tiny, and the
// caller decides what counts as singular.
double determinant(const Matrix& a);

// Inverse of (A + b*u*v^T) given ainv = A^{-1}.
Matrix sherman_morrison(const Matrix& ainv, std::span<const double> u, std::span<const double> v,
                        double b);

}  // namespace mperturb

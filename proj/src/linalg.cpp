#include "mperturb/linalg.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "mperturb/error.hpp"

namespace mperturb {
namespace {

struct Elimination {
  Matrix packed;  // L strictly below the diagonal, U on and above
  std::vector<std::size_t> perm;
  int sign = 1;
  std::optional<std::size_t> zero_pivot_column;
};

// Gaussian elimination with partial pivoting. Stops at the first column whose
// best pivot has magnitude <= threshold.
Elimination eliminate(const Matrix& a, double threshold) {
  const std::size_t n = a.size();
  Elimination e{a, std::vector<std::size_t>(n), 1, std::nullopt};
  std::iota(e.perm.begin(), e.perm.end(), std::size_t{0});
  Matrix& w = e.packed;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      // strict '>' keeps the lowest row index on ties
      if (std::abs(w(i, k)) > best) {
        best = std::abs(w(i, k));
        p = i;
      }
    }
    if (best <= threshold) {
      e.zero_pivot_column = k;
      return e;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      std::swap(e.perm[k], e.perm[p]);
      e.sign = -e.sign;
    }
    const double pivot = w(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = w(i, k) / pivot;
      w(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
    }
  }
  return e;
}

}  // namespace

LUFactors lu_factor(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::InvalidMatrix, "empty matrix");
  Elimination e = eliminate(a, kSingularRelTol * a.max_abs());
  if (e.zero_pivot_column) {
    throw Error(ErrorKind::SingularMatrix,
                "pivot below threshold in column " + std::to_string(*e.zero_pivot_column + 1));
  }
  LUFactors f{Matrix::identity(n), Matrix(n), std::move(e.perm), e.sign};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i)
        f.lower(i, j) = e.packed(i, j);
      else
        f.upper(i, j) = e.packed(i, j);
    }
  return f;
}

Vector lu_solve(const LUFactors& lu, std::span<const double> rhs) {
  const std::size_t n = lu.perm.size();
  if (rhs.size() != n) throw Error(ErrorKind::DimensionMismatch, "lu_solve right-hand side");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[lu.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu.lower(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu.upper(i, j) * x[j];
    x[i] = s / lu.upper(i, i);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  const LUFactors lu = lu_factor(a);
  const std::size_t n = a.size();
  Matrix inv(n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const Vector col = lu_solve(lu, e);
    e[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double determinant(const Matrix& a) {
  if (a.empty()) return 1.0;
  const Elimination e = eliminate(a, 0.0);
  if (e.zero_pivot_column) return 0.0;
  double det = e.sign;
  for (std::size_t i = 0; i < a.size(); ++i) det *= e.packed(i, i);
  return det;
}

Matrix sherman_morrison(const Matrix& ainv, std::span<const double> u, std::span<const double> v,
                        double b) {
  const std::size_t n = ainv.size();
  if (u.size() != n || v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "sherman_morrison vectors");
  }
  if (b == 0.0) return ainv;

  const Vector ainv_u = ainv * u;
  Vector vt_ainv(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vt_ainv[j] += v[i] * ainv(i, j);

  double vt_ainv_u = 0.0;
  for (std::size_t i = 0; i < n; ++i) vt_ainv_u += v[i] * ainv_u[i];
  const double denom = 1.0 + b * vt_ainv_u;
  if (std::abs(denom) <= kUpdateDenominatorTol) {
    throw Error(ErrorKind::UpdateSingular, "1 + b v^T A^{-1} u vanishes");
  }

  const double scale = b / denom;
  Matrix out = ainv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) -= scale * ainv_u[i] * vt_ainv[j];
  return out;
}

}  // namespace mperturb

#include "mperturb/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mperturb/error.hpp"
#include "mperturb/graphdist.hpp"
#include "mperturb/linalg.hpp"

namespace mperturb {
namespace {

double off_diagonal_abs_sum(const Matrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) s += std::abs(a(i, j));
  return s;
}

// sigma with +inf in rows where the diagonal vanishes.
Vector sigma_or_inf(const Matrix& a) {
  Vector sigma(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a(i, i));
    sigma[i] = d == 0.0 ? std::numeric_limits<double>::infinity() : off_diagonal_abs_sum(a, i) / d;
  }
  return sigma;
}

// Advance idx to the next m-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t m = idx.size();
  for (std::size_t pos = m; pos-- > 0;) {
    if (idx[pos] < n - m + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < m; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Vector sigma_vector(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i, i) == 0.0) {
      throw Error(ErrorKind::ZeroDiagonal, "a_ii = 0 at i = " + std::to_string(i + 1));
    }
  }
  return sigma_or_inf(a);
}

MonotoneCheck check_inverse_nonnegative(const Matrix& inv, double tol) {
  MonotoneCheck out;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < inv.size(); ++j)
      if (inv(i, j) < out.value) {
        out.value = inv(i, j);
        out.row = i;
        out.col = j;
      }
  out.monotone = out.value >= -tol * inv.max_abs();
  return out;
}

MonotoneCheck is_monotone(const Matrix& a, double tol) {
  try {
    return check_inverse_nonnegative(inverse(a), tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    MonotoneCheck out;
    out.singular = true;
    out.value = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
}

bool is_z_matrix(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && a(i, j) > 0.0) return false;
  return true;
}

bool is_m_matrix(const Matrix& a, double tol) { return is_z_matrix(a) && is_monotone(a, tol); }

bool is_irreducible(const Matrix& a) { return is_strongly_connected(build_digraph(a)); }

bool is_strictly_diag_dominant(const Matrix& a) {
  const Vector sigma = sigma_or_inf(a);
  return std::all_of(sigma.begin(), sigma.end(), [](double s) { return s < 1.0; });
}

bool is_irreducibly_diag_dominant(const Matrix& a) {
  const Vector sigma = sigma_or_inf(a);
  const bool weak = std::all_of(sigma.begin(), sigma.end(), [](double s) { return s <= 1.0; });
  const bool some_strict = std::any_of(sigma.begin(), sigma.end(), [](double s) { return s < 1.0; });
  return weak && some_strict && is_irreducible(a);
}

bool is_quasi_doubly_stochastic(const Matrix& a, double tol) {
  auto near_one = [tol](double s) { return std::abs(s - 1.0) <= tol; };
  const Vector r = a.row_sums();
  const Vector c = a.col_sums();
  return std::all_of(r.begin(), r.end(), near_one) && std::all_of(c.begin(), c.end(), near_one);
}

bool is_symmetric(const Matrix& a, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

bool is_tridiagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((i > j ? i - j : j - i) >= 2 && a(i, j) != 0.0) return false;
  return true;
}

bool verify_kuttler(const Matrix& a, const Matrix& m, std::span<const double> w, double tol) {
  const std::size_t n = a.size();
  if (m.size() != n || w.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "verify_kuttler operands differ in size");
  }
  const bool w_nonneg = std::all_of(w.begin(), w.end(), [](double x) { return x >= 0.0; });
  const bool w_nonzero = std::any_of(w.begin(), w.end(), [](double x) { return x > 0.0; });
  if (!w_nonneg || !w_nonzero) return false;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < a(i, j)) return false;

  const Vector aw = a * w;
  const double w_max = *std::max_element(w.begin(), w.end());
  const double floor = tol * a.max_abs() * w_max;
  if (!std::all_of(aw.begin(), aw.end(), [floor](double x) { return x > floor; })) return false;

  return is_monotone(m, tol).monotone;
}

bool is_positive_definite(const Matrix& a) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (!(determinant(a.principal_range(0, k - 1)) > 0.0)) return false;
  }
  return true;
}

bool gavrilov_check(const Matrix& a, std::size_t order, double tol) {
  const std::size_t n = a.size();
  if (!is_symmetric(a)) throw Error(ErrorKind::NotSymmetric, "Gavrilov's test needs symmetric A");
  if (order < 2 || order >= n) {
    throw Error(ErrorKind::OrderOutOfRange, "order must satisfy 2 <= m < n, got m = " +
                                                std::to_string(order) + ", n = " +
                                                std::to_string(n));
  }
  if (!is_positive_definite(a)) return false;

  std::vector<std::size_t> idx(order);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    if (!is_monotone(a.principal(idx), tol)) return false;
  } while (next_combination(idx, n));
  return true;
}

ClassificationReport classify(const Matrix& a, double tol) {
  ClassificationReport r;
  r.sigma = sigma_or_inf(a);
  for (std::size_t i = 0; i < r.sigma.size(); ++i)
    if (r.sigma[i] < 1.0) r.strict_set.push_back(i);

  r.monotone_witness = is_monotone(a, tol);
  r.is_monotone = r.monotone_witness.monotone;
  r.is_z_matrix = is_z_matrix(a);
  r.is_m_matrix = r.is_z_matrix && r.is_monotone;
  r.is_irreducible = is_irreducible(a);
  r.is_strictly_diag_dominant = r.strict_set.size() == a.size();
  const bool weak = std::all_of(r.sigma.begin(), r.sigma.end(), [](double s) { return s <= 1.0; });
  r.is_irreducibly_diag_dominant = r.is_irreducible && weak && !r.strict_set.empty();
  r.is_quasi_doubly_stochastic = is_quasi_doubly_stochastic(a);
  return r;
}

}  // namespace mperturb

#include "mperturb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mperturb/classify.hpp"
#include "mperturb/error.hpp"
#include "mperturb/graphdist.hpp"
#include "mperturb/linalg.hpp"

namespace mperturb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// v / (1 - v * total), +inf once the denominator is numerically gone.
double uniform_threshold(double v, double total) {
  const double denom = 1.0 - v * total;
  if (denom <= kMainDenominatorTol) return kInf;
  return v / denom;
}

void clamp_negative(BoundResult& b) {
  if (b.value < 0.0) {
    b.terms.emplace_back("raw_value", b.value);
    b.value = 0.0;
    b.precondition_detail += "; negative raw value clamped to 0";
  }
}

std::string flag_list(std::initializer_list<std::pair<const char*, bool>> flags) {
  std::string failed;
  for (const auto& [name, ok] : flags) {
    if (ok) continue;
    if (!failed.empty()) failed += ", ";
    failed += name;
  }
  return failed.empty() ? "all hypotheses hold" : "fails: " + failed;
}

}  // namespace

std::string_view to_string(BoundMethod m) noexcept {
  switch (m) {
    case BoundMethod::Main: return "main";
    case BoundMethod::Corollary: return "corollary";
    case BoundMethod::Bouchon: return "bouchon";
    case BoundMethod::Tridiagonal: return "tridiagonal";
  }
  return "unknown";
}

std::string_view to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::Componentwise: return "componentwise";
    case BoundKind::InfNorm: return "inf-norm";
    case BoundKind::SingleEntry: return "single-entry";
  }
  return "unknown";
}

double BoundResult::term(std::string_view name) const {
  for (const auto& [key, v] : terms)
    if (key == name) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

InverseStats inverse_stats(const Matrix& a) {
  InverseStats s;
  s.inv = inverse(a);
  s.r = s.inv.row_sums();
  s.c = s.inv.col_sums();
  for (double x : s.r) s.sigma_total += x;

  for (std::size_t i = 0; i < s.r.size(); ++i) {
    if (std::abs(s.r[i]) <= kMarginalTol) {
      throw Error(ErrorKind::ZeroMarginal, "row sum " + std::to_string(i + 1) + " of A^{-1} vanishes");
    }
    if (std::abs(s.c[i]) <= kMarginalTol) {
      throw Error(ErrorKind::ZeroMarginal,
                  "column sum " + std::to_string(i + 1) + " of A^{-1} vanishes");
    }
  }

  s.buffoni_number = kInf;
  for (std::size_t i = 0; i < s.r.size(); ++i)
    for (std::size_t j = 0; j < s.c.size(); ++j) {
      const double q = s.inv(i, j) / (s.r[i] * s.c[j]);
      if (q < s.buffoni_number) {
        s.buffoni_number = q;
        s.argmin_row = i;
        s.argmin_col = j;
      }
    }
  return s;
}

double sigma_via_determinant(const Matrix& a) {
  const LUFactors lu = lu_factor(a);
  double det_a = lu.sign;
  for (std::size_t i = 0; i < a.size(); ++i) det_a *= lu.upper(i, i);
  const double det_aj = determinant(a + Matrix::ones(a.size()));
  return (det_aj - det_a) / det_a;
}

BoundResult main_bound(const Matrix& a, double tol) { return main_bound(a, inverse_stats(a), tol); }

BoundResult main_bound(const Matrix& a, const InverseStats& stats, double tol) {
  BoundResult b;
  b.method = BoundMethod::Main;
  b.kind = BoundKind::Componentwise;
  b.value = uniform_threshold(stats.buffoni_number, stats.sigma_total);
  b.terms = {{"buffoni_number", stats.buffoni_number}, {"sigma_total", stats.sigma_total}};

  const bool sdd = is_strictly_diag_dominant(a);
  const bool z = is_z_matrix(a);
  const bool monotone = check_inverse_nonnegative(stats.inv, tol).monotone;
  b.preconditions_ok = sdd && z && monotone;
  b.precondition_detail = flag_list(
      {{"strictly diagonally dominant", sdd}, {"Z-matrix", z}, {"monotone", monotone}});
  clamp_negative(b);
  return b;
}

BoundResult corollary_bound(const Matrix& a, double tol) {
  const Matrix inv = inverse(a);
  const double m = inv.min_entry();
  const double n = static_cast<double>(a.size());

  BoundResult b;
  b.method = BoundMethod::Corollary;
  b.kind = BoundKind::Componentwise;
  b.value = uniform_threshold(m, n);
  b.terms = {{"min_inverse_entry", m}, {"n", n}};

  const bool qds = is_quasi_doubly_stochastic(a);
  const bool z = is_z_matrix(a);
  const bool monotone = check_inverse_nonnegative(inv, tol).monotone;
  b.preconditions_ok = qds && z && monotone;
  b.precondition_detail =
      flag_list({{"quasi-doubly-stochastic", qds}, {"Z-matrix", z}, {"monotone", monotone}});
  clamp_negative(b);
  return b;
}

double min_abs_diagonal(const Matrix& a) {
  double m = kInf;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::min(m, std::abs(a(i, i)));
  return m;
}

double eta(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j) != 0.0) worst = std::max(worst, std::abs(a(i, i)) / std::abs(a(i, j)));
  return worst;
}

BoundResult bouchon_bound(const Matrix& a, const Matrix& e_pattern, double tol) {
  const std::size_t big_m = bouchon_M(a, e_pattern);
  const double m_a = min_abs_diagonal(a);
  const double eta_a = eta(a);
  const double m_real = static_cast<double>(big_m);
  const double c = 1.0 / (std::pow(eta_a, m_real) * m_real * std::numbers::e);

  BoundResult b;
  b.method = BoundMethod::Bouchon;
  b.kind = BoundKind::InfNorm;
  b.value = c * m_a;
  b.terms = {{"m", m_a}, {"eta", eta_a}, {"M", m_real}, {"C", c}};

  const bool idd = is_irreducibly_diag_dominant(a);
  const bool mm = is_m_matrix(a, tol);
  const Vector e_rows = e_pattern.row_sums();
  const bool rows_nonneg = std::all_of(e_rows.begin(), e_rows.end(), [](double x) { return x >= 0.0; });
  b.preconditions_ok = idd && mm && rows_nonneg;
  b.precondition_detail = flag_list(
      {{"irreducibly diagonally dominant", idd}, {"M-matrix", mm}, {"E 1 >= 0", rows_nonneg}});
  return b;
}

double tridiagonal_principal_det(const Matrix& a, std::size_t first, std::size_t last) {
  if (first > last || last >= a.size()) throw Error(ErrorKind::IndexOutOfRange, "principal range");
  // D_k = a_kk D_{k-1} - a_{k,k-1} a_{k-1,k} D_{k-2}
  double prev = 1.0;
  double cur = a(first, first);
  for (std::size_t k = first + 1; k <= last; ++k) {
    const double next = a(k, k) * cur - a(k, k - 1) * a(k - 1, k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BoundResult tridiagonal_bound(const Matrix& a, std::size_t l, std::size_t k, double tol) {
  const std::size_t n = a.size();
  if (l >= n || k >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(l + 1) + "," +
                                                std::to_string(k + 1) + ") outside a " +
                                                std::to_string(n) + "x" + std::to_string(n) +
                                                " matrix");
  }
  if (!is_tridiagonal(a)) throw Error(ErrorKind::NotTridiagonal, "A has entries off the three central diagonals");
  if ((l > k ? l - k : k - l) < 2) {
    throw Error(ErrorKind::BandwidthViolation, "requires |l - k| >= 2");
  }

  const std::size_t lo = std::min(l, k);
  const std::size_t hi = std::max(l, k);
  double product = 1.0;
  for (std::size_t s = lo; s < hi; ++s) {
    // above the diagonal: c_s = -a_{s,s+1}; below: b_s = -a_{s+1,s}
    product *= l < k ? -a(s, s + 1) : -a(s + 1, s);
  }

  const double det = tridiagonal_principal_det(a, lo + 1, hi - 1);
  const Matrix sub = a.principal_range(lo + 1, hi - 1);
  const double scale = std::pow(std::max(sub.max_abs(), std::numeric_limits<double>::min()),
                                static_cast<double>(sub.size()));
  if (std::abs(det) <= kSingularRelTol * scale) {
    throw Error(ErrorKind::SingularSubmatrix, "principal submatrix [" + std::to_string(lo + 2) +
                                                  ":" + std::to_string(hi) + "] is singular");
  }

  BoundResult b;
  b.method = BoundMethod::Tridiagonal;
  b.kind = BoundKind::SingleEntry;
  b.value = product / det;
  b.terms = {{"off_diagonal_product", product}, {"submatrix_det", det}};
  const bool mm = is_m_matrix(a, tol);
  b.preconditions_ok = mm;
  b.precondition_detail = flag_list({{"M-matrix", mm}});
  clamp_negative(b);
  return b;
}

}  // namespace mperturb

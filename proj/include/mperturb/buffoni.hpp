#pragma once

// The exact threshold v* = sup{v >= 0 : A + vE monotone} for monotone A and
// E >= 0, by Buffoni's Newton-type iteration and by bisection on the
// monotonicity predicate.

#include <cstddef>
#include <string_view>
#include <vector>

#include "mperturb/bounds.hpp"
#include "mperturb/classify.hpp"
#include "mperturb/matrix.hpp"

namespace mperturb {

struct BuffoniOptions {
  double rtol = 1e-12;      // stop when increment < rtol * max(v_k, 1)
  std::size_t max_iter = 100;
  double v_cap = 1e12;      // v_k beyond this is reported as v* = +inf
  double w_floor = 1e-14;   // only w_ij > w_floor * max(W) take part in the min
  double monotone_tol = kDefaultMonotoneTol;
};

enum class BuffoniStatus { Converged, DivergedInfinite, MaxIterations };
std::string_view to_string(BuffoniStatus s) noexcept;

struct BuffoniStep {
  double v = 0.0;          // v_k
  double increment = 0.0;  // v_{k+1} - v_k (not applied when below tolerance)
  std::size_t row = 0;     // argmin entry of z_ij / w_ij
  std::size_t col = 0;
  double w_min = 0.0;      // smallest entry of W_k, for the W_k >= 0 check
  double w_max = 0.0;
};

struct BuffoniTrace {
  std::vector<BuffoniStep> iterates;
  BuffoniStatus status = BuffoniStatus::MaxIterations;
  double vstar = 0.0;  // +inf when diverged

  std::size_t iterations() const noexcept { return iterates.size(); }
};

// Throws NotMonotone, NegativePerturbation, DimensionMismatch, and
// SingularIterate when A + v_k E turns singular before convergence.
BuffoniTrace buffoni_vstar(const Matrix& a, const Matrix& e, const BuffoniOptions& opts = {});

struct BisectionOptions {
  double abs_tol = 1e-9;
  double v_hi_init = 1.0;
  double v_inf = 1e12;  // doubling past this reports +inf
  double monotone_tol = kDefaultMonotoneTol;
};

// Throws NotMonotone, NegativePerturbation, DimensionMismatch.
double bisection_vstar(const Matrix& a, const Matrix& e, const BisectionOptions& opts = {});

// Inverse of A + vJ from the inverse statistics of A via the rank-one
// identity: A^{-1} - v / (1 + v Sigma) r c^T. Throws UpdateSingular.
Matrix perturb_uniform_inverse(const InverseStats& stats, double v);

}  // namespace mperturb

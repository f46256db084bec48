#include "mperturb/buffoni.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mperturb/error.hpp"
#include "mperturb/linalg.hpp"

namespace mperturb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_problem(const Matrix& a, const Matrix& e, double monotone_tol) {
  if (a.size() != e.size()) throw Error(ErrorKind::DimensionMismatch, "A and E differ in size");
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e(i, j) < 0.0) {
        throw Error(ErrorKind::NegativePerturbation,
                    "e_" + std::to_string(i + 1) + std::to_string(j + 1) + " < 0");
      }
  const MonotoneCheck mc = is_monotone(a, monotone_tol);
  if (!mc.monotone) {
    throw Error(ErrorKind::NotMonotone,
                mc.singular ? std::string("A is singular")
                            : "A^{-1} has entry " + std::to_string(mc.value) + " at (" +
                                  std::to_string(mc.row + 1) + "," + std::to_string(mc.col + 1) +
                                  ")");
  }
}

}  // namespace

std::string_view to_string(BuffoniStatus s) noexcept {
  switch (s) {
    case BuffoniStatus::Converged: return "converged";
    case BuffoniStatus::DivergedInfinite: return "diverged_infinite";
    case BuffoniStatus::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

BuffoniTrace buffoni_vstar(const Matrix& a, const Matrix& e, const BuffoniOptions& opts) {
  check_problem(a, e, opts.monotone_tol);
  const std::size_t n = a.size();

  BuffoniTrace trace;
  double v = 0.0;
  for (std::size_t k = 0; k < opts.max_iter; ++k) {
    Matrix z;
    try {
      z = inverse(a + v * e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SingularMatrix) throw;
      throw Error(ErrorKind::SingularIterate,
                  "A + v E is singular at v = " + std::to_string(v) + " (iteration " +
                      std::to_string(k) + ")");
    }
    const Matrix w = z * e * z;

    BuffoniStep step;
    step.v = v;
    step.w_min = w.min_entry();
    step.w_max = *std::max_element(w.entries().begin(), w.entries().end());
    const double floor = opts.w_floor * step.w_max;

    double best = kInf;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!(w(i, j) > floor) || w(i, j) <= 0.0) continue;
        const double ratio = z(i, j) / w(i, j);
        if (ratio < best) {
          best = ratio;
          step.row = i;
          step.col = j;
        }
      }

    step.increment = best;
    trace.iterates.push_back(step);

    if (best == kInf) {
      // W_k has no usable entry (e.g. E = 0): nothing ever decreases.
      trace.status = BuffoniStatus::DivergedInfinite;
      trace.vstar = kInf;
      return trace;
    }
    if (best < opts.rtol * std::max(v, 1.0)) {
      trace.status = BuffoniStatus::Converged;
      trace.vstar = v + std::max(best, 0.0);
      return trace;
    }
    v += best;
    if (v > opts.v_cap) {
      trace.status = BuffoniStatus::DivergedInfinite;
      trace.vstar = kInf;
      return trace;
    }
  }
  trace.status = BuffoniStatus::MaxIterations;
  trace.vstar = v;
  return trace;
}

double bisection_vstar(const Matrix& a, const Matrix& e, const BisectionOptions& opts) {
  check_problem(a, e, opts.monotone_tol);
  auto monotone_at = [&](double v) { return is_monotone(a + v * e, opts.monotone_tol).monotone; };

  double lo = 0.0;
  double hi = opts.v_hi_init;
  while (monotone_at(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > opts.v_inf) return kInf;
  }
  while (hi - lo > opts.abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval below one ulp
    (monotone_at(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Matrix perturb_uniform_inverse(const InverseStats& stats, double v) {
  const double denom = 1.0 + v * stats.sigma_total;
  if (denom <= kUpdateDenominatorTol) {
    throw Error(ErrorKind::UpdateSingular, "1 + v Sigma vanishes at v = " + std::to_string(v));
  }
  const double scale = v / denom;
  Matrix out = stats.inv;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out(i, j) -= scale * stats.r[i] * stats.c[j];
  return out;
}

}  // namespace mperturb

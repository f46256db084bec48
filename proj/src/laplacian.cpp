#include "mperturb/laplacian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mperturb/error.hpp"

namespace mperturb {
namespace {

// Smallest entry of A^{-1}. For t >= 2 it sits off the diagonal of the
// bottom-right block; when s = t = 1 that block is 1x1 and the minimum is
// the off-block entry.
double min_inverse_entry(const BlockLaplacianParams& p) {
  const double s = static_cast<double>(p.s);
  const double t = static_cast<double>(p.t);
  if (p.t >= 2) return s / (p.d * (s + p.d) * (t + s + p.d));
  return 1.0 / (p.d * (s + t + p.d));
}

// Longest graph distance between distinct nodes.
std::size_t pattern_diameter(const BlockLaplacianParams& p) { return p.t >= 2 ? 2 : 1; }

}  // namespace

void validate(const BlockLaplacianParams& p) {
  if (p.s < 1 || p.t < 1) throw Error(ErrorKind::InvalidParams, "block sizes must be positive");
  if (p.s > p.t) {
    throw Error(ErrorKind::InvalidParams, "need s <= t, got s = " + std::to_string(p.s) +
                                              ", t = " + std::to_string(p.t));
  }
  if (!(p.d > 0.0) || !std::isfinite(p.d)) {
    throw Error(ErrorKind::InvalidParams, "d must be positive and finite");
  }
  if (p.d > static_cast<double>(p.s)) {
    throw Error(ErrorKind::InvalidParams, "need d <= s, got d = " + std::to_string(p.d));
  }
}

Matrix build_block_laplacian(const BlockLaplacianParams& p) {
  validate(p);
  const std::size_t n = p.dimension();
  const double s = static_cast<double>(p.s);
  const double t = static_cast<double>(p.t);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool first_i = i < p.s;
    for (std::size_t j = 0; j < n; ++j) {
      const bool first_j = j < p.s;
      if (i == j)
        a(i, j) = first_i ? t + p.d : s + p.d;
      else if (first_i != first_j)
        a(i, j) = -1.0;
    }
  }
  return a;
}

Matrix block_laplacian_inverse(const BlockLaplacianParams& p) {
  validate(p);
  const std::size_t n = p.dimension();
  const double s = static_cast<double>(p.s);
  const double t = static_cast<double>(p.t);
  const double d = p.d;
  const double total = s + t + d;

  const double top_diag = 1.0 / (t + d);
  const double top_fill = t / (d * (t + d) * total);
  const double bottom_diag = 1.0 / (s + d);
  const double bottom_fill = s / (d * (s + d) * total);
  const double cross = 1.0 / (d * total);

  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool first_i = i < p.s;
    for (std::size_t j = 0; j < n; ++j) {
      const bool first_j = j < p.s;
      if (first_i != first_j)
        inv(i, j) = cross;
      else if (first_i)
        inv(i, j) = top_fill + (i == j ? top_diag : 0.0);
      else
        inv(i, j) = bottom_fill + (i == j ? bottom_diag : 0.0);
    }
  }
  return inv;
}

double block_laplacian_buffoni_number(const BlockLaplacianParams& p) {
  validate(p);
  // r = c = (1/d) 1, so B_A = d^2 * min entry.
  return p.d * p.d * min_inverse_entry(p);
}

double block_laplacian_sigma(const BlockLaplacianParams& p) {
  validate(p);
  return static_cast<double>(p.dimension()) / p.d;
}

BlockLaplacianBounds block_laplacian_bounds(const BlockLaplacianParams& p) {
  validate(p);
  const double s = static_cast<double>(p.s);
  const double t = static_cast<double>(p.t);
  const double d = p.d;

  BlockLaplacianBounds out;

  out.main.method = BoundMethod::Main;
  out.main.kind = BoundKind::Componentwise;
  // s = t = 1 reduces to B_A / (1 - B_A Sigma) = 1 for every d.
  out.main.value = p.t >= 2 ? s / (d + 2.0 * s + t) : 1.0;
  out.main.preconditions_ok = true;
  out.main.precondition_detail = "all hypotheses hold";
  out.main.terms = {{"buffoni_number", block_laplacian_buffoni_number(p)},
                    {"sigma_total", block_laplacian_sigma(p)}};

  const double m_a = s + d;
  const double eta_a = t + d;
  const std::size_t big_m = pattern_diameter(p);
  const double m_real = static_cast<double>(big_m);
  const double c = 1.0 / (std::pow(eta_a, m_real) * m_real * std::numbers::e);
  out.bouchon.method = BoundMethod::Bouchon;
  out.bouchon.kind = BoundKind::InfNorm;
  out.bouchon.value = c * m_a;
  out.bouchon.preconditions_ok = true;
  out.bouchon.precondition_detail = "all hypotheses hold";
  out.bouchon.terms = {{"m", m_a}, {"eta", eta_a}, {"M", m_real}, {"C", c}};
  return out;
}

}  // namespace mperturb

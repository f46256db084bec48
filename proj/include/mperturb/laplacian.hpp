#pragma once

// The two-block matrix
//
//     [ (t+d) I_s    -J_{s,t} ]
//     [ -J_{t,s}    (s+d) I_t ]
//
// with s <= t and 0 < d <= s, together with its closed-form inverse and
// closed-form perturbation bounds.

#include <cstddef>

#include "mperturb/bounds.hpp"
#include "mperturb/matrix.hpp"

namespace mperturb {

struct BlockLaplacianParams {
  std::size_t s = 1;
  std::size_t t = 1;
  double d = 1.0;

  std::size_t dimension() const noexcept { return s + t; }
};

// Throws InvalidParams unless 1 <= s <= t and 0 < d <= s.
void validate(const BlockLaplacianParams& p);

Matrix build_block_laplacian(const BlockLaplacianParams& p);
Matrix block_laplacian_inverse(const BlockLaplacianParams& p);

// d s / ((s+d)(t+s+d)) for t >= 2; d / (s+t+d) when s = t = 1
// (the 2x2 inverse has no repeated off-diagonal block entry).
double block_laplacian_buffoni_number(const BlockLaplacianParams& p);
// (s+t) / d
double block_laplacian_sigma(const BlockLaplacianParams& p);

struct BlockLaplacianBounds {
  // For t >= 2: s / (d + 2s + t) and (s+d) / (2e (t+d)^2).
  // For s = t = 1 the graph distance drops to 1: main = 1, bouchon = 1/e.
  BoundResult main;
  BoundResult bouchon;
};

BlockLaplacianBounds block_laplacian_bounds(const BlockLaplacianParams& p);

}  // namespace mperturb

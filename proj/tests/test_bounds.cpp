#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mperturb/bounds.hpp"
#include "mperturb/classify.hpp"
#include "mperturb/error.hpp"
#include "mperturb/linalg.hpp"
#include "test_support.hpp"

using namespace mperturb;
using namespace mperturb::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidMatrix;
}

}  // namespace

TEST_CASE("inverse_stats on the example") {
  const InverseStats s = inverse_stats(ref3_matrix());
  CHECK(s.sigma_total == doctest::Approx(3.0).epsilon(1e-14));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.r[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.c[i] == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(s.buffoni_number == doctest::Approx(6.0 / 83.0).epsilon(1e-13));
  CHECK(std::abs(s.buffoni_number - 0.0723) <= 5e-5);
}

TEST_CASE("inverse_stats edge cases") {
  const InverseStats id = inverse_stats(Matrix::identity(4));
  CHECK(id.sigma_total == 4.0);
  CHECK(id.buffoni_number == 0.0);

  CHECK(kind_of([] { inverse_stats(Matrix{{1, 1}, {0, 1}}); }) == ErrorKind::ZeroMarginal);
  CHECK(kind_of([] { inverse_stats(Matrix{{1, 2}, {2, 4}}); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("inverse_stats invariants on random M-matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Matrix a = random_sdd_m_matrix(n, rng);
    const InverseStats s = inverse_stats(a);
    double sum_c = 0.0;
    for (double x : s.c) sum_c += x;
    CHECK(rel_diff(sum_c, s.sigma_total) <= 1e-10);
    CHECK(s.buffoni_number >= 0.0);
    CHECK(s.buffoni_number * s.sigma_total <= 1.0 + 1e-12);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(s.buffoni_number * s.r[i] * s.c[j] <= s.inv(i, j) * (1.0 + 1e-12));
  }
}

TEST_CASE("sigma_via_determinant") {
  CHECK(sigma_via_determinant(ref3_matrix()) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sigma_via_determinant(Matrix::identity(2)) == doctest::Approx(2.0));
  CHECK(kind_of([] { sigma_via_determinant(Matrix{{1, 2}, {2, 4}}); }) ==
        ErrorKind::SingularMatrix);

  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = random_well_conditioned(6, rng);
    CHECK(rel_diff(sigma_via_determinant(a), inverse_stats(a).sigma_total) <= 1e-8);
  }
}

TEST_CASE("main_bound") {
  const BoundResult b = main_bound(ref3_matrix());
  CHECK(b.value == doctest::Approx(6.0 / 65.0).epsilon(1e-13));
  CHECK(std::abs(b.value - 0.0923) <= 5e-5);
  CHECK(b.preconditions_ok);
  CHECK(b.method == BoundMethod::Main);
  CHECK(b.kind == BoundKind::Componentwise);

  CHECK(main_bound(Matrix::identity(3)).value == 0.0);

  // Not diagonally dominant: value still reported, hypotheses flagged.
  const Matrix weak{{1, -1, 0}, {-0.5, 1, -0.5}, {0, -1, 2}};
  const BoundResult w = main_bound(weak);
  CHECK_FALSE(w.preconditions_ok);
  CHECK(w.precondition_detail.find("strictly diagonally dominant") != std::string::npos);
}

TEST_CASE("main_bound maps a vanishing denominator to +inf") {
  // 1x1: B_A = 1/a, Sigma = 1/a, so 1 - B_A Sigma = 1 - 1/a^2; a = 1 gives 0.
  CHECK(std::isinf(main_bound(Matrix{{1.0}}).value));
}

TEST_CASE("main_bound is sharp for uniform perturbations") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Matrix a = random_sdd_m_matrix(n, rng);
    const double v = main_bound(a).value;
    REQUIRE(std::isfinite(v));
    REQUIRE(v > 0.0);
    const Matrix j = Matrix::ones(n);
    CHECK(oracle::monotone(a + v * j));
    CHECK_FALSE(oracle::monotone(a + 1.01 * v * j));
    CHECK(rel_diff(v, oracle::threshold(a, j)) <= 1e-6);
  }
}

TEST_CASE("corollary_bound") {
  const BoundResult b = corollary_bound(ref3_matrix());
  CHECK(b.value == doctest::Approx(6.0 / 65.0).epsilon(1e-13));
  CHECK(b.preconditions_ok);
  CHECK(b.term("min_inverse_entry") == doctest::Approx(6.0 / 83.0));
  CHECK(corollary_bound(Matrix::identity(4)).value == 0.0);

  CHECK_FALSE(corollary_bound(2.0 * Matrix::identity(3)).preconditions_ok);

  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_qds_m_matrix(3 + trial % 6, rng);
    const BoundResult c = corollary_bound(a);
    CHECK(c.preconditions_ok);
    CHECK(rel_diff(c.value, main_bound(a).value) <= 1e-12);
  }
}

TEST_CASE("bouchon_bound on the example follows the stated definitions") {
  const BoundResult b = bouchon_bound(ref3_matrix(), Matrix::ones(3));
  CHECK(b.term("m") == doctest::Approx(1.4));
  // |a_33| / |a_31| = 1.6 / 0.2
  CHECK(b.term("eta") == doctest::Approx(8.0));
  CHECK(b.term("M") == 2.0);
  CHECK(b.value == doctest::Approx(1.4 / (128.0 * std::numbers::e)));
  CHECK(b.preconditions_ok);
  CHECK(b.kind == BoundKind::InfNorm);
  CHECK(main_bound(ref3_matrix()).value > b.value);
}

TEST_CASE("bouchon_bound on a scaled cycle") {
  // 2 (I - C/2), C the cyclic shift on 3 nodes
  const Matrix a{{2, -1, 0}, {0, 2, -1}, {-1, 0, 2}};
  const BoundResult b = bouchon_bound(a, Matrix::ones(3));
  CHECK(b.term("m") == 2.0);
  CHECK(b.term("eta") == 2.0);
  CHECK(b.term("M") == 2.0);
  CHECK(b.value == doctest::Approx(2.0 / (8.0 * std::numbers::e)));
}

TEST_CASE("bouchon_bound hypotheses and errors") {
  Matrix e = Matrix::ones(3);
  e(0, 0) = -5.0;  // row sum negative
  CHECK_FALSE(bouchon_bound(ref3_matrix(), e).preconditions_ok);
  CHECK(kind_of([] { bouchon_bound(ref3_matrix(), Matrix::identity(3)); }) ==
        ErrorKind::EmptyPerturbation);
  CHECK(kind_of([] { bouchon_bound(Matrix{{1, -1}, {0, 1}}, Matrix::ones(2)); }) ==
        ErrorKind::UnreachablePair);
}

TEST_CASE("bouchon_bound is sound on random irreducibly dominant M-matrices") {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Matrix a = random_idd_m_matrix(n, rng);
    Matrix e = random_nonnegative(n, rng);
    const BoundResult b = bouchon_bound(a, e);
    REQUIRE(b.preconditions_ok);
    double inf_norm = 0.0;
    for (double r : e.row_sums()) inf_norm = std::max(inf_norm, r);
    e *= 0.99 * b.value / inf_norm;
    CHECK(oracle::monotone(a + e));
  }
}

TEST_CASE("tridiagonal_bound frozen values") {
  const BoundResult b13 = tridiagonal_bound(path3_matrix(), 0, 2);
  CHECK(b13.value == doctest::Approx(0.5));
  CHECK(b13.kind == BoundKind::SingleEntry);
  CHECK(b13.preconditions_ok);
  CHECK(tridiagonal_bound(path3_matrix(), 2, 0).value == doctest::Approx(0.5));

  const Matrix a = tridiag4_matrix();
  CHECK(tridiagonal_bound(a, 0, 3).value == doctest::Approx(2.0 / 19.0).epsilon(1e-14));
  CHECK(tridiagonal_bound(a, 3, 0).value == doctest::Approx(6.0 / 19.0).epsilon(1e-14));
  CHECK(tridiagonal_bound(a, 0, 2).value == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(tridiagonal_bound(a, 1, 3).value == doctest::Approx(0.4).epsilon(1e-14));

  CHECK(rel_diff(tridiagonal_bound(a, 0, 3).value, oracle::threshold(a, Matrix::unit(4, 0, 3))) <=
        1e-9);
}

TEST_CASE("tridiagonal_bound errors") {
  CHECK(kind_of([] { tridiagonal_bound(ref3_matrix(), 0, 2); }) == ErrorKind::NotTridiagonal);
  CHECK(kind_of([] { tridiagonal_bound(path3_matrix(), 0, 1); }) == ErrorKind::BandwidthViolation);
  CHECK(kind_of([] { tridiagonal_bound(path3_matrix(), 1, 1); }) == ErrorKind::BandwidthViolation);
  CHECK(kind_of([] { tridiagonal_bound(path3_matrix(), 0, 3); }) == ErrorKind::IndexOutOfRange);
  const Matrix hole{{2, -1, 0}, {-1, 0, -1}, {0, -1, 2}};
  CHECK(kind_of([&] { tridiagonal_bound(hole, 0, 2); }) == ErrorKind::SingularSubmatrix);
}

TEST_CASE("tridiagonal determinant recurrence agrees with cofactor expansion") {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Matrix a = random_tridiagonal_m_matrix(n, rng);
    CHECK(rel_diff(tridiagonal_principal_det(a, 0, n - 1), oracle::det_by_expansion(a)) <= 1e-12);
    if (n >= 3) {
      CHECK(rel_diff(tridiagonal_principal_det(a, 1, n - 2),
                     oracle::det_by_expansion(a.principal_range(1, n - 2))) <= 1e-12);
    }
  }
}

TEST_CASE("tridiagonal_bound is sharp on random instances") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Matrix a = random_tridiagonal_m_matrix(n, rng);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        if ((l > k ? l - k : k - l) < 2) continue;
        const double h = tridiagonal_bound(a, l, k).value;
        const Matrix e = Matrix::unit(n, l, k);
        CHECK(oracle::monotone(a + h * e));
        CHECK_FALSE(oracle::monotone(a + 1.001 * h * e));
      }
  }
}

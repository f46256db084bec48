#include <doctest.h>

#include "mperturb/classify.hpp"
#include "mperturb/error.hpp"
#include "mperturb/graphdist.hpp"
#include "test_support.hpp"

using namespace mperturb;
using namespace mperturb::testing;

using Adj = std::vector<std::vector<std::size_t>>;

TEST_CASE("build_digraph") {
  // 1->3, 2->1, 3->1, 3->2 in 1-based terms
  CHECK(build_digraph(ref3_matrix()).adjacency == Adj{{2}, {0}, {0, 1}});
  CHECK(build_digraph(Matrix{{1, 0}, {0, 2}}).edge_count() == 0);
  CHECK(build_digraph(Matrix::ones(3)).adjacency == Adj{{1, 2}, {0, 2}, {0, 1}});
  // zero_tol drops small entries
  CHECK(build_digraph(Matrix{{1, 1e-9}, {1, 1}}, 1e-6).adjacency == Adj{{}, {0}});
}

TEST_CASE("distance") {
  const MatrixDigraph g = build_digraph(ref3_matrix());
  CHECK(distance(g, 0, 1) == Distance{2});
  CHECK(distance(g, 0, 2) == Distance{1});
  for (std::size_t i = 0; i < 3; ++i) CHECK(distance(g, i, i) == Distance{0});

  const MatrixDigraph one_way = build_digraph(Matrix{{1, 1}, {0, 1}});
  CHECK(distance(one_way, 0, 1) == Distance{1});
  CHECK_FALSE(distance(one_way, 1, 0).has_value());

  CHECK_THROWS_AS(distance(g, 0, 3), Error);
  CHECK_THROWS_AS(distance(g, 5, 0), Error);
}

TEST_CASE("bouchon_M") {
  CHECK(bouchon_M(ref3_matrix(), Matrix::ones(3)) == 2);
  CHECK(bouchon_M(Matrix::ones(4) + Matrix::identity(4), Matrix::ones(4)) == 1);
  CHECK(bouchon_M(ref3_matrix(), Matrix::unit(3, 0, 2)) == 1);
  CHECK(bouchon_M(ref3_matrix(), Matrix::unit(3, 0, 1)) == 2);

  try {
    bouchon_M(ref3_matrix(), Matrix::identity(3));
    FAIL("expected EmptyPerturbation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyPerturbation);
  }
  try {
    bouchon_M(Matrix{{1, 1}, {0, 1}}, Matrix::ones(2));
    FAIL("expected UnreachablePair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnreachablePair);
  }
}

TEST_CASE("graph distance properties on random patterns") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 8;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || uniform(rng, 0, 1) < 0.3) a(i, j) = uniform(rng, 0.5, 1.0);
    const MatrixDigraph g = build_digraph(a);

    std::vector<std::vector<Distance>> d(n);
    bool all_finite = true;
    for (std::size_t i = 0; i < n; ++i) d[i] = distances_from(g, i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        all_finite = all_finite && d[i][j].has_value();
        CHECK((d[i][j] == Distance{1}) == (i != j && a(i, j) != 0.0));
        for (std::size_t k = 0; k < n; ++k)
          if (d[i][j] && d[j][k] && d[i][k]) CHECK(*d[i][k] <= *d[i][j] + *d[j][k]);
      }
    CHECK(all_finite == is_irreducible(a));
  }
}

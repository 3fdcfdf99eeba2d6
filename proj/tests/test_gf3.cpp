#include <doctest.h>

#include <random>

#include "lrc3/constructions.hpp"
#include "lrc3/gf3.hpp"
#include "test_util.hpp"

using namespace lrc3;

TEST_CASE("rank") {
  CHECK(rank(Gf3Matrix::identity(3)) == 3);
  CHECK(rank(hamming13_parity()) == 3);

  // row2 = 2 * row1
  Gf3Matrix m = Gf3Matrix::from_rows({{1, 2, 0, 1}, {2, 1, 0, 2}});
  CHECK(rank(m) == 1);
}

TEST_CASE("rref") {
  CHECK(rref(Gf3Matrix::identity(4)) == Gf3Matrix::identity(4));

  // dependent rows collapse; zero rows are dropped
  Gf3Matrix m = Gf3Matrix::from_rows({{1, 1, 1}, {2, 2, 2}});
  CHECK(rref(m) == Gf3Matrix::from_rows({{1, 1, 1}}));

  CHECK(rref(tetracode_parity()) == Gf3Matrix::from_rows({{1, 0, 1, 2}, {0, 1, 1, 1}}));
}

TEST_CASE("null_space") {
  CHECK(null_space(Gf3Matrix::ones_row(3)).rows() == 2);
  CHECK(null_space(Gf3Matrix::identity(3)).rows() == 0);

  // null space of the tetracode parity check spans the [4,2,3] code:
  // 8 codewords of weight 3 among the 9 spanned vectors
  Gf3Matrix g = null_space(tetracode_parity());
  REQUIRE(g.rows() == 2);
  std::size_t weight3 = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      std::size_t w = 0;
      for (std::size_t j = 0; j < 4; ++j)
        if (gf3_add(gf3_mul(uint8_t(a), g.at(0, j)), gf3_mul(uint8_t(b), g.at(1, j))) != 0)
          ++w;
      if (w == 3) ++weight3;
    }
  CHECK(weight3 == 8);
}

TEST_CASE("kronecker") {
  Gf3Matrix expected = Gf3Matrix::from_rows({{1, 1, 1, 0, 0, 0, 0, 0, 0},
                                             {0, 0, 0, 1, 1, 1, 0, 0, 0},
                                             {0, 0, 0, 0, 0, 0, 1, 1, 1}});
  CHECK(kronecker(Gf3Matrix::identity(3), Gf3Matrix::ones_row(3)) == expected);

  Gf3Matrix m = Gf3Matrix::from_rows({{1, 2}, {0, 1}});
  CHECK(kronecker(Gf3Matrix::identity(1), m) == m);

  // last row of the d=3 uniform-cover construction
  Gf3Matrix row = kronecker(Gf3Matrix::ones_row(4), Gf3Matrix::from_rows({{0, 1, 2}}));
  CHECK(row == Gf3Matrix::from_rows({{0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2}}));

  CHECK(kronecker(Gf3Matrix::identity(2), Gf3Matrix::identity(3)) == Gf3Matrix::identity(6));
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
    Gf3Matrix m = testutil::random_matrix(rng, rows, cols);

    std::size_t rk = rank(m);
    CHECK(rk == rank(rref(m)));
    CHECK(rk == rank(transpose(m)));

    Gf3Matrix ns = null_space(m);
    CHECK(rk + ns.rows() == cols);
    for (std::size_t i = 0; i < ns.rows(); ++i) {
      Gf3Matrix v(1, cols);
      for (std::size_t j = 0; j < cols; ++j) v.set(0, j, ns.at(i, j));
      Gf3Matrix prod = mat_mul(m, transpose(v));
      for (std::size_t t = 0; t < prod.rows(); ++t) CHECK(prod.at(t, 0) == 0);
    }
  }
}

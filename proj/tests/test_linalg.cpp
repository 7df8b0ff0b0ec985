#include <doctest.h>

#include <random>

#include "pcw/linalg.hpp"

using namespace pcw;

namespace {

// Oracle: textbook Gauss-Jordan over Q on a dense copy.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("sparse elimination matches dense rank on random matrices") {
  std::mt19937 rng(3);
  for (int t = 0; t < 400; ++t) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 9;
    const int density = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (static_cast<int>(rng() % 5) >= density) continue;
        Rational q(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
        q.canonicalize();
        dense[i][j] = q;
        m(i, j) = q;
      }
    }
    // Occasionally duplicate a combination of rows to force dependence.
    if (rows > 2 && t % 3 == 0) {
      for (std::size_t j = 0; j < cols; ++j) {
        dense[rows - 1][j] = dense[0][j] * 2 - dense[1][j] / 3;
        m(rows - 1, j) = dense[rows - 1][j];
      }
    }
    CHECK(rank(m) == dense_rank(dense));
  }
}

TEST_CASE("two-term systems stay consistent") {
  // x0 = 2 x1, x1 = 3 x2, x2 = x0 / 6 is dependent; x2 = x0 is not.
  SparseEliminator e(3);
  CHECK(e.add_row({{0, 1}, {1, -2}}));
  CHECK(e.add_row({{1, 1}, {2, -3}}));
  CHECK_FALSE(e.add_row({{2, 6}, {0, -1}}));
  CHECK(e.nullity() == 1);
  CHECK(e.add_row({{2, 1}, {0, -1}}));
  CHECK(e.nullity() == 0);
}

TEST_CASE("duplicate columns merge and zero rows are ignored") {
  SparseEliminator e(2);
  CHECK_FALSE(e.add_row({{0, 1}, {0, -1}}));
  CHECK_FALSE(e.add_row({}));
  CHECK(e.add_row({{1, Rational(1, 2)}, {1, Rational(1, 3)}}));
  CHECK(e.rank() == 1);
}

TEST_CASE("matrix product") {
  RationalMatrix a(2, 3);
  RationalMatrix b(3, 1);
  a(0, 0) = 1;
  a(0, 2) = Rational(1, 2);
  a(1, 1) = 3;
  b(0, 0) = 2;
  b(1, 0) = 1;
  b(2, 0) = 4;
  const RationalMatrix c = a * b;
  CHECK(c(0, 0) == 4);
  CHECK(c(1, 0) == 3);
  CHECK_FALSE(c.is_zero());
  CHECK(RationalMatrix(2, 2).is_zero());
}

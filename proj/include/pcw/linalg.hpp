#ifndef PCW_LINALG_HPP
#define PCW_LINALG_HPP

// Exact linear algebra over Q backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace pcw {

using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseEntry = std::pair<std::size_t, Rational>;

// Incremental row echelon form without fractions. Rows are stored with
// primitive integer coefficients, so a system whose rows have at most two
// terms never produces a longer row during reduction.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t columns);

  // Returns true when the row increased the rank.
  bool add_row(const std::vector<SparseEntry>& row);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t nullity() const noexcept { return columns_ - rank_; }

 private:
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

  std::size_t columns_;
  std::size_t rank_ = 0;
  std::vector<IntRow> pivots_;  // pivots_[c] is empty unless c is a pivot column
};

std::size_t rank(const RationalMatrix& m);

}  // namespace pcw

#endif  // PCW_LINALG_HPP

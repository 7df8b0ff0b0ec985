#include "pcw/linalg.hpp"

#include <algorithm>
#include <map>

namespace pcw {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Divide by the gcd of the coefficients and make the leading one positive.
void normalize(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// a * x - b * y, both sorted by column; zero entries dropped.
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

SparseEliminator::SparseEliminator(std::size_t columns)
    : columns_(columns), pivots_(columns) {}

bool SparseEliminator::add_row(const std::vector<SparseEntry>& row) {
  // Merge duplicate columns, then clear denominators.
  std::map<std::size_t, Rational> merged;
  for (const auto& [c, v] : row) merged[c] += v;
  mpz_class denom = 1;
  for (const auto& [c, v] : merged) {
    if (v != 0) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
  }
  IntRow cur;
  for (const auto& [c, v] : merged) {
    if (v == 0) continue;
    mpz_class scaled = v.get_num() * (denom / v.get_den());
    cur.emplace_back(c, std::move(scaled));
  }
  normalize(cur);

  while (!cur.empty()) {
    const std::size_t lead = cur.front().first;
    const IntRow& piv = pivots_[lead];
    if (piv.empty()) {
      pivots_[lead] = std::move(cur);
      ++rank_;
      return true;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), cur.front().second.get_mpz_t());
    const mpz_class a = piv.front().second / g;
    const mpz_class b = cur.front().second / g;
    cur = combine(a, cur, b, piv);
    normalize(cur);
  }
  return false;
}

std::size_t rank(const RationalMatrix& m) {
  SparseEliminator elim(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<SparseEntry> row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) row.emplace_back(j, m(i, j));
    }
    elim.add_row(row);
  }
  return elim.rank();
}

}  // namespace pcw

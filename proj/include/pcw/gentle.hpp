#ifndef PCW_GENTLE_HPP
#define PCW_GENTLE_HPP

// The gentle algebra Lambda_n: quiver with arrows alpha_i, beta_i : i+1 -> i
// (1 <= i < n) and relations beta_i alpha_{i+1} = 0 = alpha_i beta_{i+1}.
//
// Walks are written like compositions of maps: in x_1 x_2 ... x_r the letter
// x_r is walked first, so t(x_{k+1}) = s(x_k). A band walk is such a word read
// cyclically.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "pcw/dyck.hpp"
#include "pcw/linalg.hpp"
#include "pcw/words.hpp"

namespace pcw {

enum class ArrowKind { Alpha, Beta };

struct Arrow {
  ArrowKind kind;
  int index;  // 1..n-1

  int source() const noexcept { return index + 1; }
  int target() const noexcept { return index; }

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// outer * inner is one of the defining zero relations.
bool is_relation(const Arrow& outer, const Arrow& inner) noexcept;

struct SignedStep {
  Arrow arrow;
  bool inverse = false;

  int source() const noexcept { return inverse ? arrow.target() : arrow.source(); }
  int target() const noexcept { return inverse ? arrow.source() : arrow.target(); }
  SignedStep inverted() const noexcept { return {arrow, !inverse}; }

  // alpha < beta, then by index, then direct < inverse.
  friend bool operator==(const SignedStep&, const SignedStep&) = default;
  friend auto operator<=>(const SignedStep&, const SignedStep&) = default;
};

// Empty when the cyclic word is a band walk over Lambda_n, else the reason.
std::string band_walk_defect(const std::vector<SignedStep>& steps, int n);

bool validate_band_walk(const std::vector<SignedStep>& steps, int n);

class BandWalk {
 public:
  // Throws InvalidWalk unless validate_band_walk holds.
  BandWalk(std::vector<SignedStep> steps, int n);

  int n() const noexcept { return n_; }
  const std::vector<SignedStep>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }

  // Rotation whose step sequence is lexicographically least.
  BandWalk canonical() const;
  // Visits per vertex, index v-1 for vertex v.
  std::vector<std::size_t> vertex_visits() const;
  // Tokens such as "a1 b1- a2".
  std::string to_string() const;

  friend bool operator==(const BandWalk&, const BandWalk&) = default;

 private:
  std::vector<SignedStep> steps_;
  int n_;
};

// z_i = alpha_1 ... alpha_{i-1} beta_{i-1}^-1 ... beta_1^-1, for 2 <= i.
std::vector<SignedStep> letter_cycle(int i);

// psi(w) = z_{w_1} ... z_{w_r} for a primitive word over {2..n}.
BandWalk psi(const Word& w, int n);

class BandModule {
 public:
  // A representation of Lambda_n. Throws InvalidModule on shape errors or
  // when a relation does not vanish.
  BandModule(int n, std::vector<std::size_t> dims, std::vector<RationalMatrix> mats,
             Rational lambda = 1);

  int n() const noexcept { return n_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex - 1)]; }
  std::size_t total_dim() const noexcept;
  const RationalMatrix& mat(const Arrow& a) const { return mats_[slot(a)]; }
  const std::vector<RationalMatrix>& mats() const noexcept { return mats_; }
  const Rational& lambda() const noexcept { return lambda_; }

  // Position of an arrow in mats(): alpha_i at 2(i-1), beta_i at 2(i-1)+1.
  static std::size_t slot(const Arrow& a) noexcept;
  static Arrow arrow_at(std::size_t slot) noexcept;

 private:
  int n_;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> mats_;
  Rational lambda_;
};

// B_{z,1,lambda}; lambda sits on the first step of the canonical rotation.
BandModule band_module(const BandWalk& z, const Rational& lambda);

BandModule direct_sum(const std::vector<BandModule>& summands);

// dim Hom(M, N), from the intertwiner equations f_j M_g = N_g f_i.
std::size_t hom_dim(const BandModule& m, const BandModule& n);

bool is_brick(const BandModule& m);

// dim Ext^1(X, Y) = dim Hom(Y, X) over this algebra.
std::size_t ext1_dim(const BandModule& x, const BandModule& y);

// Peaks count +1 and deeps -1 at their vertex.
GVector g_vector_of_band(const BandWalk& z);

// The band walk traced by one closed component of a multislalom.
BandWalk slalom_to_band_walk(const Multislalom& m, std::size_t component);

}  // namespace pcw

#endif  // PCW_GENTLE_HPP

#ifndef PCW_FORMS_HPP
#define PCW_FORMS_HPP

// Euler form, brick and compatibility tests on g-vectors, and the bounds on
// families of mutually compatible bricks.

#include <cstddef>
#include <vector>

#include "pcw/dyck.hpp"
#include "pcw/gentle.hpp"

namespace pcw {

// sum a_i b_i + 2 sum_{i<j} a_i b_j
long long euler_form(const GVector& x, const GVector& y);

// <x,y> = -<y,x> on the zero-sum hyperplane. Throws NotInHyperplane.
bool euler_skew_check(const GVector& x, const GVector& y);

// One brick family inside a semibrick: the band walk of a component and how
// many components share it.
struct BrickFamily {
  GVector gvector;
  BandWalk walk;
  std::size_t multiplicity;
};

// Families sorted by g-vector; the multiplicity-weighted sum of g-vectors is g.
std::vector<BrickFamily> semibrick_decomposition(const GVector& g);

// dim End of the semibrick with g-vector g. Repeated families get distinct
// parameters 1, 2, ... so the sum is a semibrick.
std::size_t semibrick_end_dim(const GVector& g);

std::size_t component_count(const GVector& g);

// Single component and End = k at lambda = 1, 2, 3. Throws
// InternalInconsistency if the two tests disagree.
bool is_brick_gvector(const GVector& g);

// Closed-form test for n = 4.
bool is_brick_gvector_n4(const GVector& g);

// Zero Hom in both directions between the brick families. Throws NotABrick,
// or GenericityViolation if sampled parameters disagree.
bool compatible(const GVector& g1, const GVector& g2);

// <g(X), g(Y)> = dim Hom(X,Y) - dim Hom(Y,X).
bool hom_difference_check(const BandWalk& z1, const BandWalk& z2);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<GVector> witness;
  std::size_t candidates = 0;  // brick g-vectors in the box
};

// The b^i family: ceil((n-1)/2) mutually compatible brick g-vectors.
std::vector<GVector> compatible_family(int n);

// Exact maximum over brick g-vectors with entries in [-box, box]. When the
// b^i family fits the box and attains the maximum it is reported as witness.
CliqueResult max_compatible_search(int n, int box);

// Distinct necklaces of phi(n^{a_n} ... 2^{a_2}), alpha = (a_2, ..., a_n).
std::size_t distinct_necklace_count(const std::vector<int>& alpha);

// distinct_necklace_count(alpha) <= ceil((n-1)/2). Throws AllZero.
bool necklace_count_bound_check(const std::vector<int>& alpha);

}  // namespace pcw

#endif  // PCW_FORMS_HPP

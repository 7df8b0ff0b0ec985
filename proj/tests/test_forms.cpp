#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "pcw/dyck.hpp"
#include "pcw/error.hpp"
#include "pcw/forms.hpp"
#include "pcw/gentle.hpp"
#include "pcw/io.hpp"

using namespace pcw;

namespace {

Word w(std::string_view s) { return parse_word(s).word; }

void for_each_box(int n, int box, const std::function<void(const GVector&)>& fn) {
  GVector g(static_cast<std::size_t>(n), -box);
  while (true) {
    fn(g);
    std::size_t k = 0;
    while (k < g.size() && g[k] == box) g[k++] = -box;
    if (k == g.size()) return;
    ++g[k];
  }
}

// Oracle: Euler form from the explicit bilinear matrix E with 1 on the
// diagonal and 2 above it.
long long euler_oracle(const GVector& x, const GVector& y) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const long long e = i == j ? 1 : (i < j ? 2 : 0);
      s += e * x[i] * y[j];
    }
  }
  return s;
}

// Oracle for maximum compatible families: bricks are single-component
// g-vectors whose band module has a one-dimensional endomorphism ring;
// compatibility is vanishing Hom both ways at two parameter pairs; the
// maximum is found by trying every subset.
std::size_t max_compatible_oracle(int n, int box) {
  std::vector<BandWalk> bricks;
  for_each_box(n, box, [&](const GVector& g) {
    if (!validate_gvector(g)) return;
    const Multislalom m = reconstruct_multislalom(g);
    if (m.components.size() != 1) return;
    const BandWalk z = slalom_to_band_walk(m, 0);
    if (is_brick(band_module(z, 1))) bricks.push_back(z);
  });
  const std::size_t k = bricks.size();
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const BandModule x = band_module(bricks[i], 2);
      const BandModule y = band_module(bricks[j], 3);
      ok[i][j] = ok[j][i] = hom_dim(x, y) == 0 && hom_dim(y, x) == 0;
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < k && clique; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < k && clique; ++j) {
        if (mask >> j & 1) clique = ok[i][j];
      }
    }
    if (clique) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("Euler form") {
  CHECK(euler_form({-1, -2, -2, 5}, {-3, 0, -4, 7}) == 0);
  CHECK(euler_form({1, 0}, {0, 1}) == 2);
  CHECK(euler_form({0, 1}, {1, 0}) == 0);
  for_each_box(3, 2, [](const GVector& x) {
    for (const GVector& y : {GVector{-1, -1, 2}, GVector{2, 0, -1}, GVector{-3, 1, 1}}) {
      CHECK(euler_form(x, y) == euler_oracle(x, y));
    }
  });
}

TEST_CASE("Euler form is skew on the hyperplane") {
  for_each_box(3, 2, [](const GVector& x) {
    if (std::accumulate(x.begin(), x.end(), 0) != 0) return;
    CHECK(euler_skew_check(x, {-2, 1, 1}));
    CHECK(euler_form(x, x) == 0);
  });
  CHECK_THROWS_AS(euler_skew_check({1, 0}, {-1, 1}), Error);
}

TEST_CASE("Euler form on n = 3 is a determinant") {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        for (int d = 0; d <= 6; ++d) {
          CHECK(euler_form({-a - b, a, b}, {-c - d, c, d}) == a * d - b * c);
        }
      }
    }
  }
}

TEST_CASE("brick g-vectors") {
  CHECK(is_brick_gvector({-1, -1, 2}));
  CHECK(is_brick_gvector({-1, 1}));
  CHECK_FALSE(is_brick_gvector({-2, 2}));
  CHECK_FALSE(is_brick_gvector({-8, 2, 2, 4}));
  CHECK_FALSE(is_brick_gvector({-3, -1, 3, -2, 3}));
  CHECK(is_brick_gvector({-2, -1, -3, 6}));
  CHECK_THROWS_AS(is_brick_gvector({1, -1}), Error);
  CHECK(component_count({-8, 2, 2, 4}) == 2);
  CHECK(semibrick_end_dim({-8, 2, 2, 4}) == 2);
  CHECK(semibrick_end_dim({-3, -1, 3, -2, 3}) == 2);
}

TEST_CASE("slopes for n = 3") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(is_brick_gvector({-a - b, a, b}) == (std::gcd(a, b) == 1));
    }
  }
}

TEST_CASE("closed form for n = 4") {
  CHECK(is_brick_gvector_n4({-2, -1, -3, 6}));
  CHECK_FALSE(is_brick_gvector_n4({-8, 2, 2, 4}));
  CHECK(is_brick_gvector_n4({-1, -2, -2, 5}));
  CHECK_THROWS_AS(is_brick_gvector_n4({-1, -1, 2}), Error);
  for_each_box(4, 3, [](const GVector& g) {
    if (!validate_gvector(g)) return;
    CHECK(is_brick_gvector_n4(g) == is_brick_gvector(g));
  });
}

TEST_CASE("semibrick decomposition") {
  const auto parts = semibrick_decomposition({-8, 2, 2, 4});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].gvector == GVector{-4, 1, 1, 2});
  CHECK(parts[0].multiplicity == 2);
  const auto two = semibrick_decomposition({-3, -1, 3, -2, 3});
  CHECK(two.size() == 2);
  GVector sum(5, 0);
  for (const auto& f : two) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += static_cast<int>(f.multiplicity) * f.gvector[i];
    CHECK(g_vector_of_band(f.walk) == f.gvector);
  }
  CHECK(sum == GVector{-3, -1, 3, -2, 3});
}

TEST_CASE("compatibility") {
  CHECK_FALSE(compatible({-1, -2, -2, 5}, {-3, 0, -4, 7}));
  CHECK(compatible({-2, 1, 0, 1}, {-1, 0, 1, 0}));
  CHECK_THROWS_AS(compatible({-8, 2, 2, 4}, {-1, 1, 0, 0}), Error);
  try {
    compatible({-2, 2}, {-1, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotABrick);
  }
}

TEST_CASE("Euler form equals the Hom difference") {
  const BandWalk z2 = psi(w("2"), 3);
  const BandWalk z3 = psi(w("3"), 3);
  CHECK(hom_difference_check(z2, z3));
  CHECK(hom_difference_check(psi(w("23223"), 3), psi(w("2233"), 3)));
  CHECK(hom_difference_check(psi(w("2423"), 4), psi(w("34"), 4)));
}

TEST_CASE("the b family") {
  CHECK(compatible_family(4) == std::vector<GVector>{{-2, 1, 0, 1}, {-1, 0, 1, 0}});
  CHECK(compatible_family(5) == std::vector<GVector>{{-2, 1, 0, 0, 1}, {-2, 0, 1, 1, 0}});
  CHECK(compatible_family(2) == std::vector<GVector>{{-1, 1}});
  for (int n = 2; n <= 7; ++n) {
    const auto fam = compatible_family(n);
    CHECK(fam.size() == static_cast<std::size_t>(n / 2));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CHECK(is_brick_gvector(fam[i]));
      for (std::size_t j = i + 1; j < fam.size(); ++j) CHECK(compatible(fam[i], fam[j]));
    }
  }
}

TEST_CASE("maximum compatible families") {
  const CliqueResult r4 = max_compatible_search(4, 2);
  CHECK(r4.size == 2);
  CHECK(r4.witness == compatible_family(4));
  CHECK(max_compatible_search(3, 3).size == 1);
  CHECK(max_compatible_search(5, 2).size == 2);
  for (const auto& nb : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 1}, {4, 2}}) {
    const int n = nb.first;
    const int box = nb.second;
    CAPTURE(n);
    CAPTURE(box);
    const CliqueResult r = max_compatible_search(n, box);
    CHECK(r.size == max_compatible_oracle(n, box));
    CHECK(r.witness.size() == r.size);
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      for (std::size_t j = i + 1; j < r.witness.size(); ++j) CHECK(compatible(r.witness[i], r.witness[j]));
    }
  }
}

TEST_CASE("distinct necklace bound") {
  CHECK(distinct_necklace_count({2, 2, 4}) == 1);
  CHECK(distinct_necklace_count({1}) == 1);
  CHECK(distinct_necklace_count({2, 0}) == 1);
  CHECK(necklace_count_bound_check({2, 2, 4}));
  CHECK_THROWS_AS(distinct_necklace_count({0, 0}), Error);
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (int c = 0; c <= 5; ++c) {
        if (a + b + c == 0) continue;
        CHECK(necklace_count_bound_check({a, b, c}));
      }
    }
  }
}

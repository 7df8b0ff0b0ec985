#include "pcw/forms.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "pcw/clique.hpp"
#include "pcw/error.hpp"

namespace pcw {

namespace {

std::string show(const GVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

void require_valid(const GVector& g) {
  if (!validate_gvector(g)) throw Error(ErrorKind::InvalidGVector, show(g));
}

// Canonical band walk of a single-component g-vector.
BandWalk single_walk(const Multislalom& m) {
  return slalom_to_band_walk(m, 0).canonical();
}

constexpr std::array<int, 3> kLambdas{1, 2, 3};

int ceil_half(int k) { return (k + 1) / 2; }

// Both arguments are known bricks with canonical walks w1, w2.
bool compatible_bricks(const GVector& g1, const BandWalk& w1, const GVector& g2,
                       const BandWalk& w2) {
  if (euler_form(g1, g2) != 0) return false;
  // Equal walks must use distinct parameters to get non-isomorphic bricks.
  static constexpr std::array<std::pair<int, int>, 3> kDistinct{{{1, 1}, {2, 3}, {3, 2}}};
  static constexpr std::array<std::pair<int, int>, 3> kEqual{{{1, 2}, {2, 3}, {3, 1}}};
  const auto& pairs = w1 == w2 ? kEqual : kDistinct;

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [l1, l2] : pairs) {
    const BandModule x = band_module(w1, l1);
    const BandModule y = band_module(w2, l2);
    seen.emplace(hom_dim(x, y), hom_dim(y, x));
  }
  if (seen.size() != 1) {
    throw Error(ErrorKind::GenericityViolation,
                "Hom dimensions between " + show(g1) + " and " + show(g2) +
                    " depend on the parameters");
  }
  return *seen.begin() == std::pair<std::size_t, std::size_t>{0, 0};
}

}  // namespace

long long euler_form(const GVector& x, const GVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "g-vectors of different lengths");
  }
  long long total = 0;
  long long prefix = 0;  // sum of x_i for i < j
  for (std::size_t j = 0; j < y.size(); ++j) {
    total += (static_cast<long long>(x[j]) + 2 * prefix) * y[j];
    prefix += x[j];
  }
  return total;
}

bool euler_skew_check(const GVector& x, const GVector& y) {
  for (const GVector* v : {&x, &y}) {
    if (std::accumulate(v->begin(), v->end(), 0LL) != 0) {
      throw Error(ErrorKind::NotInHyperplane, show(*v));
    }
  }
  return euler_form(x, y) == -euler_form(y, x);
}

std::vector<BrickFamily> semibrick_decomposition(const GVector& g) {
  require_valid(g);
  const Multislalom m = reconstruct_multislalom(g);
  std::vector<BrickFamily> out;
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    BandWalk walk = slalom_to_band_walk(m, c).canonical();
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const BrickFamily& f) { return f.walk == walk; });
    if (it != out.end()) {
      ++it->multiplicity;
    } else {
      out.push_back({m.components[c].gvector, std::move(walk), 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const BrickFamily& a, const BrickFamily& b) {
    return a.gvector < b.gvector;
  });
  return out;
}

std::size_t semibrick_end_dim(const GVector& g) {
  std::vector<BandModule> summands;
  for (const auto& family : semibrick_decomposition(g)) {
    for (std::size_t k = 1; k <= family.multiplicity; ++k) {
      summands.push_back(band_module(family.walk, Rational(static_cast<long>(k))));
    }
  }
  const BandModule sum = direct_sum(summands);
  return hom_dim(sum, sum);
}

std::size_t component_count(const GVector& g) {
  require_valid(g);
  return reconstruct_multislalom(g).components.size();
}

bool is_brick_gvector(const GVector& g) {
  require_valid(g);
  const Multislalom m = reconstruct_multislalom(g);
  if (m.components.size() != 1) return false;
  const BandWalk walk = single_walk(m);
  for (int lambda : kLambdas) {
    if (!is_brick(band_module(walk, lambda))) {
      throw Error(ErrorKind::InternalInconsistency,
                  "single curve for " + show(g) + " but End is not k at lambda = " +
                      std::to_string(lambda));
    }
  }
  return true;
}

bool is_brick_gvector_n4(const GVector& g) {
  if (g.size() != 4) throw Error(ErrorKind::BadDimension, "the closed form needs n = 4");
  require_valid(g);
  if (g == GVector{-1, 1, 0, 0} || g == GVector{0, 0, -1, 1}) return true;
  const int ab = g[0] + g[1];
  const int bc = g[1] + g[2];
  return ab != 0 && std::gcd(ab, bc) == 1;
}

bool compatible(const GVector& g1, const GVector& g2) {
  for (const GVector* g : {&g1, &g2}) {
    if (!is_brick_gvector(*g)) throw Error(ErrorKind::NotABrick, show(*g));
  }
  return compatible_bricks(g1, single_walk(reconstruct_multislalom(g1)), g2,
                           single_walk(reconstruct_multislalom(g2)));
}

bool hom_difference_check(const BandWalk& z1, const BandWalk& z2) {
  if (z1.n() != z2.n()) throw Error(ErrorKind::DimensionMismatch, "walks over different n");
  const bool same = z1.canonical() == z2.canonical();
  const BandModule x = band_module(z1, 1);
  const BandModule y = band_module(z2, same ? 2 : 1);
  const long long lhs = euler_form(g_vector_of_band(z1), g_vector_of_band(z2));
  const long long rhs = static_cast<long long>(hom_dim(x, y)) -
                        static_cast<long long>(hom_dim(y, x));
  return lhs == rhs;
}

std::vector<GVector> compatible_family(int n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "n must be at least 2");
  std::vector<GVector> out;
  const auto un = static_cast<std::size_t>(n);
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    GVector b(un, 0);
    b[0] = -2;
    b[static_cast<std::size_t>(i)] = 1;          // position i+1
    b[static_cast<std::size_t>(n - i)] = 1;      // position n-i+1
    out.push_back(std::move(b));
  }
  if (n % 2 == 0) {
    GVector b(un, 0);
    b[0] = -1;
    b[static_cast<std::size_t>(n / 2)] = 1;      // position n/2+1
    out.push_back(std::move(b));
  }
  return out;
}

CliqueResult max_compatible_search(int n, int box) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "n must be at least 2");
  if (box < 1) throw Error(ErrorKind::BadDimension, "box must be at least 1");

  std::vector<GVector> bricks;
  std::vector<BandWalk> walks;
  GVector g(static_cast<std::size_t>(n), -box);
  while (true) {
    if (validate_gvector(g) && is_brick_gvector(g)) {
      bricks.push_back(g);
      walks.push_back(single_walk(reconstruct_multislalom(g)));
    }
    std::size_t k = 0;
    while (k < g.size() && g[k] == box) g[k++] = -box;
    if (k == g.size()) break;
    ++g[k];
  }

  Graph adj(bricks.size(), std::vector<bool>(bricks.size(), false));
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    for (std::size_t j = i + 1; j < bricks.size(); ++j) {
      if (compatible_bricks(bricks[i], walks[i], bricks[j], walks[j])) {
        adj[i][j] = adj[j][i] = true;
      }
    }
  }

  CliqueResult result;
  result.candidates = bricks.size();
  for (std::size_t v : maximum_clique(adj)) result.witness.push_back(bricks[v]);
  result.size = result.witness.size();

  std::vector<GVector> family = compatible_family(n);
  const bool fits = std::all_of(family.begin(), family.end(), [&](const GVector& b) {
    return std::all_of(b.begin(), b.end(), [&](int x) { return std::abs(x) <= box; });
  });
  if (fits && family.size() == result.size) {
    bool clique = true;
    for (std::size_t i = 0; i < family.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < family.size() && clique; ++j) {
        clique = compatible(family[i], family[j]);
      }
    }
    if (clique) result.witness = std::move(family);
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

std::size_t distinct_necklace_count(const std::vector<int>& alpha) {
  if (alpha.empty() || std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; })) {
    throw Error(ErrorKind::AllZero, "exponent vector is zero");
  }
  std::vector<int> letters;
  for (std::size_t k = alpha.size(); k-- > 0;) {
    if (alpha[k] < 0) throw Error(ErrorKind::InvalidGVector, "negative exponent");
    letters.insert(letters.end(), static_cast<std::size_t>(alpha[k]), static_cast<int>(k) + 2);
  }
  return phi(Word(std::move(letters))).distinct();
}

bool necklace_count_bound_check(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size()) + 1;
  return distinct_necklace_count(alpha) <= static_cast<std::size_t>(ceil_half(n - 1));
}

}  // namespace pcw

#include "pcw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pcw/dyck.hpp"
#include "pcw/error.hpp"
#include "pcw/forms.hpp"
#include "pcw/gentle.hpp"
#include "pcw/io.hpp"
#include "pcw/render.hpp"
#include "pcw/words.hpp"

namespace pcw {

namespace {

// Counts checks and keeps the first few failures for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }

  // Runs fn and records a domain error as a failure.
  void guard(const std::string& what, const std::function<bool()>& fn) {
    try {
      check(fn(), what);
    } catch (const std::exception& e) {
      check(false, what + " threw " + e.what());
    }
  }

  bool passed() const { return failed_ == 0 && checked_ > 0; }

  std::string summary(const std::string& extra = {}) const {
    std::ostringstream out;
    out << checked_ << " checks, " << failed_ << " mismatches";
    if (!extra.empty()) out << "; " << extra;
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
};

std::string show(const GVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

Word letters(std::string_view text) { return parse_word(text).word; }

NecklaceMultiset necklaces(std::initializer_list<std::string_view> words) {
  NecklaceMultiset m;
  for (auto w : words) m.insert(Necklace(letters(w)));
  return m;
}

// All words of length len over {lo..hi}, in lexicographic order.
void for_each_word(int lo, int hi, std::size_t len, const std::function<void(const Word&)>& fn) {
  std::vector<int> w(len, lo);
  while (true) {
    fn(Word(w));
    std::size_t k = len;
    while (k > 0 && w[k - 1] == hi) w[--k] = lo;
    if (k == 0) return;
    ++w[k - 1];
  }
}

// Compositions (a_2, ..., a_n) of every total 1..max_total into n-1 parts.
void for_each_exponent(int n, int max_total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == a.size()) {
      if (std::any_of(a.begin(), a.end(), [](int x) { return x > 0; })) fn(a);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[i] = x;
      rec(i + 1, left - x);
    }
    a[i] = 0;
  };
  rec(0, max_total);
}

Word exponent_word(const std::vector<int>& alpha) {
  std::vector<int> w;
  for (std::size_t k = alpha.size(); k-- > 0;) {
    w.insert(w.end(), static_cast<std::size_t>(alpha[k]), static_cast<int>(k) + 2);
  }
  return Word(std::move(w));
}

// A random band walk built letter by letter in written order.
std::optional<BandWalk> random_band_walk(std::mt19937_64& rng, int n, std::size_t len) {
  std::vector<SignedStep> all;
  for (int i = 1; i < n; ++i) {
    for (ArrowKind k : {ArrowKind::Alpha, ArrowKind::Beta}) {
      all.push_back({{k, i}, false});
      all.push_back({{k, i}, true});
    }
  }
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::uniform_int_distribution<std::size_t> any(0, all.size() - 1);
    std::vector<SignedStep> steps{all[any(rng)]};
    while (steps.size() < len) {
      const SignedStep& x = steps.back();
      std::vector<SignedStep> next;
      for (const auto& y : all) {
        if (y.target() != x.source() || x == y.inverted()) continue;
        if (!x.inverse && !y.inverse && is_relation(x.arrow, y.arrow)) continue;
        if (x.inverse && y.inverse && is_relation(y.arrow, x.arrow)) continue;
        next.push_back(y);
      }
      if (next.empty()) break;
      steps.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
    }
    if (steps.size() == len && validate_band_walk(steps, n)) return BandWalk(steps, n);
  }
  return std::nullopt;
}

GVector random_valid_gvector(std::mt19937_64& rng, int n, int max_abs_sum) {
  std::uniform_int_distribution<int> entry(-max_abs_sum / 2, max_abs_sum / 2);
  while (true) {
    GVector g(static_cast<std::size_t>(n));
    for (auto& x : g) x = entry(rng);
    int total = 0;
    for (int x : g) total += std::abs(x);
    if (total <= max_abs_sum && validate_gvector(g)) return g;
  }
}

NecklaceMultiset random_multiset(std::mt19937_64& rng, std::size_t max_total) {
  NecklaceMultiset m;
  std::size_t used = 0;
  std::uniform_int_distribution<int> letter(1, 3);
  while (used < max_total) {
    const std::size_t room = std::min<std::size_t>(max_total - used, 7);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, room)(rng);
    std::vector<int> w(len);
    for (auto& x : w) x = letter(rng);
    Word word(std::move(w));
    if (!is_primitive(word)) continue;
    m.insert(Necklace(word));
    used += len;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
  }
  return m;
}

// Criterion 1: worked examples.
std::string golden(Tally& t) {
  t.guard("BW(acab)", [] { return bw_transform(letters("acab")) == letters("cbaa"); });
  t.guard("BW(acba)", [] { return bw_transform(letters("acba")) == letters("baca"); });
  t.guard("BW(acacacbbbc)", [] {
    return bw_transform(letters("acacacbbbc")) == letters("ccccbbbaaa");
  });
  t.guard("BW^-1(ccccbbbaaa)", [] {
    return bw_inverse(letters("ccccbbbaaa")) == Necklace(letters("acacacbbbc"));
  });
  t.guard("st(baaacaba)", [] {
    return standard_permutation(letters("baaacaba")) ==
           Permutation({6, 1, 2, 3, 8, 4, 7, 5});
  });
  t.guard("phi(baacbcab)", [] {
    return phi(letters("baacbcab")) == necklaces({"baaac", "b", "cb"});
  });
  t.guard("phi^-1", [] {
    return phi_inverse(necklaces({"baaac", "b", "cb"})) == letters("baacbcab");
  });
  t.guard("M(-3,-1,3,-2,3)", [] {
    return circular_words({-3, -1, 3, -2, 3}) == necklaces({"54545131", "3231"});
  });
  t.guard("M(-8,2,2,4)", [] {
    return circular_words({-8, 2, 2, 4}) == necklaces({"41314121", "41314121"});
  });
  t.guard("f(M(-8,2,2,4)) = phi(44443322)", [] {
    const auto expected = necklaces({"4342", "4342"});
    return erase_ones(circular_words({-8, 2, 2, 4})) == expected &&
           phi(letters("44443322")) == expected;
  });
  t.guard("psi(23223)", [] {
    return psi(letters("23223"), 3).to_string() ==
           "a1 b1- a1 a2 b2- b1- a1 b1- a1 b1- a1 a2 b2- b1-";
  });
  return {};
}

// Criterion 2: perfectly clustering iff the band module of psi(w) is a brick.
std::string brick_bands(Tally& t) {
  std::size_t words = 0;
  std::size_t clustering = 0;
  auto sweep = [&](int hi, std::size_t max_len) {
    for (std::size_t len = 1; len <= max_len; ++len) {
      for_each_word(2, hi, len, [&](const Word& w) {
        if (!is_primitive(w)) return;
        ++words;
        const bool pc = is_perfectly_clustering(w);
        clustering += pc ? 1 : 0;
        const BandWalk z = psi(w, hi);
        for (int lambda : {1, 2, 3}) {
          t.guard(format_word(w, WordEncoding::Digits) + " lambda " + std::to_string(lambda),
                  [&] { return is_brick(band_module(z, lambda)) == pc; });
        }
      });
    }
  };
  sweep(3, 10);
  sweep(4, 7);
  return std::to_string(words) + " primitive words, " + std::to_string(clustering) +
         " perfectly clustering";
}

// Criterion 3: erasing 1 from the multislalom words gives phi.
std::string curves_to_words(Tally& t) {
  for (int n = 2; n <= 5; ++n) {
    for_each_exponent(n, 7, [&](const std::vector<int>& alpha) {
      GVector g{-std::accumulate(alpha.begin(), alpha.end(), 0)};
      g.insert(g.end(), alpha.begin(), alpha.end());
      t.guard(show(g), [&] { return erase_ones(circular_words(g)) == phi(exponent_word(alpha)); });
    });
  }
  return {};
}

// Criterion 4: <g(X), g(Y)> = dim Hom(X,Y) - dim Hom(Y,X).
std::string euler_hom(Tally& t, std::mt19937_64& rng) {
  std::size_t pairs = 0;
  std::size_t nonzero = 0;
  while (pairs < 240) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    auto draw = [&] {
      return random_band_walk(rng, n, std::uniform_int_distribution<std::size_t>(2, 16)(rng));
    };
    auto x = draw();
    auto y = draw();
    if (!x || !y) continue;
    ++pairs;
    nonzero += euler_form(g_vector_of_band(*x), g_vector_of_band(*y)) != 0 ? 1 : 0;
    t.guard(x->to_string() + " | " + y->to_string(), [&] { return hom_difference_check(*x, *y); });
  }
  return std::to_string(pairs) + " pairs, " + std::to_string(nonzero) + " with non-zero form";
}

// Criterion 5: closed form, single curve and End dimension agree for n = 4.
std::string bricks_four(Tally& t) {
  std::size_t valid_wide = 0;
  std::size_t valid_narrow = 0;
  std::size_t bricks = 0;
  auto each = [](int box, const std::function<void(const GVector&)>& fn) {
    for (int a = -box; a <= box; ++a)
      for (int b = -box; b <= box; ++b)
        for (int c = -box; c <= box; ++c)
          for (int d = -box; d <= box; ++d) {
            GVector g{a, b, c, d};
            if (validate_gvector(g)) fn(g);
          }
  };
  each(8, [&](const GVector& g) {
    ++valid_wide;
    const bool closed = is_brick_gvector_n4(g);
    bricks += closed ? 1 : 0;
    t.guard(show(g) + " closed form vs curves", [&] { return closed == (component_count(g) == 1); });
  });
  each(5, [&](const GVector& g) {
    ++valid_narrow;
    t.guard(show(g) + " closed form vs End", [&] {
      return is_brick_gvector_n4(g) == (semibrick_end_dim(g) == 1);
    });
  });
  for (const GVector& g : std::vector<GVector>{{-2, -1, -3, 6}, {-2, -3, 1, 4}, {-4, 3, -2, 3},
                                               {-1, 1, 0, 0}, {0, 0, -1, 1}}) {
    t.guard(show(g) + " named vector", [&] {
      return is_brick_gvector_n4(g) && component_count(g) == 1 && semibrick_end_dim(g) == 1 &&
             is_brick_gvector(g);
    });
  }
  return std::to_string(valid_wide) + " vectors in [-8,8], " + std::to_string(bricks) +
         " bricks; " + std::to_string(valid_narrow) + " vectors in [-5,5] with End computed";
}

// Criterion 6: maximum compatible families.
std::string max_families(Tally& t) {
  std::ostringstream info;
  auto run = [&](int n, int box, std::size_t expected, bool family_witness) {
    const CliqueResult r = max_compatible_search(n, box);
    info << (info.tellp() > 0 ? "; " : "") << "n=" << n << " box=" << box << ": " << r.size
         << " of " << r.candidates << " bricks";
    t.check(r.size == expected, "n=" + std::to_string(n) + " size " + std::to_string(r.size));
    if (family_witness) {
      auto family = compatible_family(n);
      std::sort(family.begin(), family.end());
      t.check(r.witness == family, "n=" + std::to_string(n) + " witness is not the b family");
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
          t.guard(show(family[i]) + " ~ " + show(family[j]),
                  [&] { return compatible(family[i], family[j]); });
        }
      }
    }
  };
  run(3, 2, 1, true);
  run(4, 2, 2, true);
  run(5, 2, 2, true);
  run(3, 4, 1, false);
  return info.str();
}

// Criterion 7: at most ceil((n-1)/2) distinct necklaces.
std::string necklace_bound(Tally& t, std::mt19937_64& rng) {
  std::size_t worst = 0;
  for (int sample = 0; sample < 500;) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int budget = std::uniform_int_distribution<int>(1, 16)(rng);
    std::vector<int> alpha(static_cast<std::size_t>(n - 1), 0);
    for (int k = 0; k < budget; ++k) {
      ++alpha[std::uniform_int_distribution<std::size_t>(0, alpha.size() - 1)(rng)];
    }
    ++sample;
    worst = std::max(worst, distinct_necklace_count(alpha));
    t.guard("random n=" + std::to_string(n), [&] { return necklace_count_bound_check(alpha); });
  }
  for_each_exponent(4, 10, [&](const std::vector<int>& alpha) {
    t.guard("n=4 exhaustive", [&] { return necklace_count_bound_check(alpha); });
  });
  return "largest distinct count in random sample " + std::to_string(worst);
}

// Criterion 8: n = 3, bricks are the coprime slopes; Euler form is a determinant.
std::string christoffel(Tally& t) {
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      if (a == 0 && b == 0) continue;
      const GVector g{-a - b, a, b};
      t.guard(show(g), [&] { return is_brick_gvector(g) == (std::gcd(a, b) == 1); });
      for (int c = 0; c <= 12; ++c) {
        for (int d = 0; d <= 12; ++d) {
          if (c == 0 && d == 0) continue;
          const long long det = static_cast<long long>(a) * d - static_cast<long long>(b) * c;
          t.check(euler_form(g, {-c - d, c, d}) == det, show(g) + " determinant");
        }
      }
    }
  }
  return {};
}

// Criterion 9: orthogonal but incompatible pair, with a brick midpoint.
std::string witness(Tally& t) {
  const GVector a{-1, -2, -2, 5};
  const GVector b{-3, 0, -4, 7};
  t.guard("Euler form zero", [&] { return euler_form(a, b) == 0; });
  t.guard("not compatible", [&] { return !compatible(a, b); });
  t.guard("midpoint is a brick", [] { return is_brick_gvector({-2, -1, -3, 6}); });
  return {};
}

// Criterion 10: decomposition, phi round trip, renderer determinism.
std::string structural(Tally& t, std::mt19937_64& rng) {
  for (int sample = 0; sample < 300; ++sample) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const GVector g = random_valid_gvector(rng, n, 16);
    t.guard(show(g) + " decomposition", [&] {
      const auto families = semibrick_decomposition(g);
      GVector sum(g.size(), 0);
      std::size_t count = 0;
      for (const auto& f : families) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          sum[i] += static_cast<int>(f.multiplicity) * f.gvector[i];
        }
        count += f.multiplicity;
        if (!is_brick_gvector(f.gvector)) return false;
      }
      for (std::size_t i = 0; i < families.size(); ++i) {
        for (std::size_t j = i; j < families.size(); ++j) {
          if (i == j && families[i].multiplicity == 1) continue;
          if (!compatible(families[i].gvector, families[j].gvector)) return false;
        }
      }
      return sum == g && semibrick_end_dim(g) == count;
    });
  }
  for (int sample = 0; sample < 200; ++sample) {
    const NecklaceMultiset m = random_multiset(rng, 14);
    t.guard("phi round trip", [&] { return phi(phi_inverse(m)) == m; });
  }
  for (const GVector& g : std::vector<GVector>{{-3, -1, 3, -2, 3}, {-1, 1}, {-8, 2, 2, 4}}) {
    t.guard(show(g) + " render", [&] { return render_dyck(g) == render_dyck(g); });
  }
  return {};
}

struct Criterion {
  int id;
  const char* suite;
  const char* name;
};

constexpr Criterion kCriteria[] = {
    {1, "golden", "worked examples"},
    {2, "thm47", "perfectly clustering iff brick band"},
    {3, "thm46", "erased multislalom words equal phi"},
    {4, "euler-hom", "Euler form equals Hom difference"},
    {5, "n4", "n = 4 brick characterisation"},
    {6, "maxcompat", "maximum compatible families"},
    {7, "length", "distinct necklace bound"},
    {8, "christoffel", "n = 3 coprime slopes and determinant"},
    {9, "witness", "orthogonal incompatible pair"},
    {10, "structural", "decomposition, round trip, determinism"},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kCriteria) out.emplace_back(c.suite);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  const auto it = std::find_if(std::begin(kCriteria), std::end(kCriteria),
                               [&](const Criterion& c) { return c.id == id; });
  if (it == std::end(kCriteria)) throw std::invalid_argument("no criterion " + std::to_string(id));

  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(id));
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::string extra;
  try {
    switch (id) {
      case 1: extra = golden(t); break;
      case 2: extra = brick_bands(t); break;
      case 3: extra = curves_to_words(t); break;
      case 4: extra = euler_hom(t, rng); break;
      case 5: extra = bricks_four(t); break;
      case 6: extra = max_families(t); break;
      case 7: extra = necklace_bound(t, rng); break;
      case 8: extra = christoffel(t); break;
      case 9: extra = witness(t); break;
      case 10: extra = structural(t, rng); break;
    }
  } catch (const std::exception& e) {
    t.check(false, std::string("aborted: ") + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {id, it->name, t.passed(), t.summary(extra), elapsed.count()};
}

std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (name == "all" || name == c.suite) out.push_back(run_criterion(c.id, options));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace pcw

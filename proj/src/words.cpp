#include "pcw/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pcw/error.hpp"

namespace pcw {

namespace {

void require_nonempty(const Word& w, const char* where) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, where);
}

// Compare rotations of w starting at i and j, letter by letter.
int compare_rotations(const Word& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    int a = w[(i + k) % n];
    int b = w[(j + k) % n];
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

std::size_t smallest_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) fixed = w[i] == w[(i + p) % n];
    if (fixed) return p;
  }
  return n;
}

}  // namespace

Word::Word(std::initializer_list<int> letters)
    : Word(std::vector<int>(letters)) {}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 1) {
      throw Error(ErrorKind::LetterOutOfRange,
                  "letters must be positive, got " + std::to_string(x));
    }
  }
}

std::size_t Word::count(int letter) const {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), letter));
}

int Word::max_letter() const {
  return letters_.empty() ? 0
                          : *std::max_element(letters_.begin(), letters_.end());
}

Word concat(const Word& u, const Word& v) {
  std::vector<int> out = u.letters();
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<int> out = w.letters();
  std::rotate(out.begin(), out.begin() + static_cast<long>(k % w.size()),
              out.end());
  return Word(std::move(out));
}

std::vector<Word> rotations(const Word& w) {
  require_nonempty(w, "rotations");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

bool is_primitive(const Word& w) {
  require_nonempty(w, "is_primitive");
  return smallest_period(w) == w.size();
}

Word minimal_rotation(const Word& w) {
  require_nonempty(w, "minimal_rotation");
  std::size_t best = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (compare_rotations(w, k, best) < 0) best = k;
  }
  return rotate(w, best);
}

Necklace::Necklace(const Word& any_rotation)
    : rep_(minimal_rotation(any_rotation)),
      period_(smallest_period(any_rotation)) {}

NecklaceMultiset::NecklaceMultiset(const std::vector<Necklace>& necklaces) {
  for (const auto& nk : necklaces) insert(nk);
}

void NecklaceMultiset::insert(const Necklace& necklace,
                              std::size_t multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), necklace,
      [](const Entry& e, const Necklace& nk) { return e.first < nk; });
  if (it != entries_.end() && it->first == necklace) {
    it->second += multiplicity;
  } else {
    entries_.insert(it, Entry{necklace, multiplicity});
  }
}

std::size_t NecklaceMultiset::size() const noexcept {
  std::size_t total = 0;
  for (const auto& [nk, m] : entries_) total += m;
  return total;
}

std::size_t NecklaceMultiset::total_length() const noexcept {
  std::size_t total = 0;
  for (const auto& [nk, m] : entries_) total += m * nk.length();
  return total;
}

std::vector<Word> NecklaceMultiset::expanded() const {
  std::vector<Word> out;
  for (const auto& [nk, m] : entries_) {
    for (std::size_t i = 0; i < m; ++i) out.push_back(nk.representative());
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || static_cast<std::size_t>(x) > images_.size() ||
        seen[static_cast<std::size_t>(x - 1)]) {
      throw Error(ErrorKind::InternalInconsistency, "not a permutation");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 1; start <= images_.size(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    for (int i = static_cast<int>(start); !seen[static_cast<std::size_t>(i - 1)];
         i = (*this)(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Word bw_transform(const Word& w) {
  require_nonempty(w, "bw_transform");
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return compare_rotations(w, i, j) < 0;
  });
  std::vector<int> last;
  last.reserve(n);
  for (std::size_t k : order) last.push_back(w[(k + n - 1) % n]);
  return Word(std::move(last));
}

bool is_perfectly_clustering(const Word& w) {
  if (!is_primitive(w)) return false;
  const Word b = bw_transform(w);
  return std::is_sorted(b.begin(), b.end(), std::greater<>());
}

bool is_perfectly_clustering_by_factors(const Word& w) {
  require_nonempty(w, "is_perfectly_clustering_by_factors");
  if (!is_primitive(w)) {
    throw Error(ErrorKind::NonPrimitive, "factor criterion needs a primitive word");
  }
  const std::size_t n = w.size();
  // For each middle part u, the set of letter pairs (a, b) framing it.
  for (std::size_t len = 0; len + 2 <= n; ++len) {
    std::map<std::vector<int>, std::set<std::pair<int, int>>> frames;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> u;
      u.reserve(len);
      for (std::size_t k = 1; k <= len; ++k) u.push_back(w[(i + k) % n]);
      frames[u].emplace(w[i], w[(i + len + 1) % n]);
    }
    for (const auto& [u, pairs] : frames) {
      for (const auto& [a, b] : pairs) {
        for (const auto& [a2, b2] : pairs) {
          if (a < a2 && b < b2) return false;
        }
      }
    }
  }
  return true;
}

Permutation standard_permutation(const Word& w) {
  require_nonempty(w, "standard_permutation");
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w[i] < w[j]; });
  std::vector<int> images(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    images[order[rank]] = static_cast<int>(rank + 1);
  }
  return Permutation(std::move(images));
}

bool infinite_power_less(const Word& u, const Word& v) {
  // Two infinite powers that agree on |u| + |v| letters are equal.
  const std::size_t horizon = u.size() + v.size();
  for (std::size_t k = 0; k < horizon; ++k) {
    int a = u[k % u.size()];
    int b = v[k % v.size()];
    if (a != b) return a < b;
  }
  return false;
}

NecklaceMultiset phi(const Word& w) {
  require_nonempty(w, "phi");
  NecklaceMultiset out;
  for (const auto& cycle : standard_permutation(w).inverse().cycles()) {
    std::vector<int> letters;
    letters.reserve(cycle.size());
    for (int i : cycle) letters.push_back(w[static_cast<std::size_t>(i - 1)]);
    Necklace nk{Word(std::move(letters))};
    if (!nk.is_primitive()) {
      throw Error(ErrorKind::InternalInconsistency,
                  "a cycle of the inverse standard permutation gave a power");
    }
    out.insert(nk);
  }
  return out;
}

Word phi_inverse(const NecklaceMultiset& necklaces) {
  std::vector<Word> rows;
  for (const auto& [nk, m] : necklaces.entries()) {
    if (!nk.is_primitive()) {
      throw Error(ErrorKind::NonPrimitiveNecklace, "phi_inverse");
    }
    for (const Word& r : rotations(nk.representative())) {
      for (std::size_t i = 0; i < m; ++i) rows.push_back(r);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), infinite_power_less);
  std::vector<int> last;
  last.reserve(rows.size());
  for (const Word& r : rows) last.push_back(r[r.size() - 1]);
  return Word(std::move(last));
}

Necklace bw_inverse(const Word& w) {
  require_nonempty(w, "bw_inverse");
  const auto cycles = standard_permutation(w).inverse().cycles();
  if (cycles.size() != 1) {
    throw Error(ErrorKind::MultipleCycles,
                std::to_string(cycles.size()) + " cycles");
  }
  std::vector<int> letters;
  for (int i : cycles.front()) letters.push_back(w[static_cast<std::size_t>(i - 1)]);
  return Necklace(Word(std::move(letters)));
}

}  // namespace pcw

#ifndef PCW_WORDS_HPP
#define PCW_WORDS_HPP

// Words over a totally ordered alphabet of positive integers, necklaces,
// the Burrows-Wheeler transform and the Gessel-Reutenauer bijection.
//
// Letters are plain ints >= 1 compared by integer order. Textual alphabets
// (a < b < c, digit strings) are translated at the I/O boundary, see io.hpp.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace pcw {

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // |w|_x
  std::size_t count(int letter) const;
  int max_letter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

Word concat(const Word& u, const Word& v);

// Left rotation by k (k taken modulo |w|).
Word rotate(const Word& w, std::size_t k);

// All |w| rotations, index k = rotate(w, k). Duplicates are kept.
std::vector<Word> rotations(const Word& w);

bool is_primitive(const Word& w);

Word minimal_rotation(const Word& w);

// A conjugacy class of words, stored as its lexicographically least rotation.
class Necklace {
 public:
  explicit Necklace(const Word& any_rotation);

  const Word& representative() const noexcept { return rep_; }
  std::size_t length() const noexcept { return rep_.size(); }
  // Smallest k > 0 with rotate(w, k) == w.
  std::size_t period() const noexcept { return period_; }
  bool is_primitive() const noexcept { return period_ == rep_.size(); }

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.rep_ == b.rep_;
  }
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Word rep_;
  std::size_t period_;
};

// Multiset of necklaces, kept sorted by representative with multiplicities.
class NecklaceMultiset {
 public:
  using Entry = std::pair<Necklace, std::size_t>;

  NecklaceMultiset() = default;
  explicit NecklaceMultiset(const std::vector<Necklace>& necklaces);

  void insert(const Necklace& necklace, std::size_t multiplicity = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  // Number of necklaces counted with multiplicity.
  std::size_t size() const noexcept;
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::size_t total_length() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }
  // Representatives repeated by multiplicity, in sorted order.
  std::vector<Word> expanded() const;

  friend bool operator==(const NecklaceMultiset&,
                         const NecklaceMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

// One-line notation, 1-indexed images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  // Disjoint cycles, each starting at its least element, ordered by it.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Last column of the Burrows-Wheeler tableau.
Word bw_transform(const Word& w);

bool is_perfectly_clustering(const Word& w);

// Circular-factor criterion: no circular factors aub and a'ub' with a < a'
// and b < b'. Requires a primitive word.
bool is_perfectly_clustering_by_factors(const Word& w);

Permutation standard_permutation(const Word& w);

// u < v iff uuu... < vvv... lexicographically.
bool infinite_power_less(const Word& u, const Word& v);

// Gessel-Reutenauer map: cycles of st(w)^-1 read through the letters of w.
NecklaceMultiset phi(const Word& w);

// Last column of the infinite-power tableau of all rotations.
Word phi_inverse(const NecklaceMultiset& necklaces);

// Requires st(w)^-1 to be a single cycle.
Necklace bw_inverse(const Word& w);

}  // namespace pcw

#endif  // PCW_WORDS_HPP

#ifndef PCW_DYCK_HPP
#define PCW_DYCK_HPP

// Dyck-path model of closed multislaloms on the two-polygon surface of the
// algebra Lambda_n. A g-vector (a_1, ..., a_n) becomes a labelled Dyck word,
// its canonical nested matching is drawn on both polygon copies, and gluing
// the copies splits the chords into closed components.

#include <cstddef>
#include <string>
#include <vector>

#include "pcw/words.hpp"

namespace pcw {

using GVector = std::vector<int>;

enum class StepDir { Up, Down };

struct DyckStep {
  StepDir dir;
  int label;  // 1..n

  friend bool operator==(const DyckStep&, const DyckStep&) = default;
};

struct DyckDiagram {
  int n = 0;
  std::vector<DyckStep> steps;

  // Height before each step; the entry at index steps.size() is the final 0.
  std::vector<int> heights() const;
  // "u"/"d" word.
  std::string dyck_word() const;
};

struct SlalomComponent {
  // Step indices in the order the component arrives at them.
  std::vector<std::size_t> steps;
  // Labels of those steps, read cyclically this is the component's word.
  std::vector<int> arrivals;
  GVector gvector;
};

struct Multislalom {
  GVector g;
  DyckDiagram diagram;
  // partner[i]: the step matched with step i by the nested matching.
  std::vector<std::size_t> partner;
  // mirror[i]: the step on the other polygon copy glued to step i.
  std::vector<std::size_t> mirror;
  std::vector<SlalomComponent> components;
  // component_of[i]: index into components of the component through step i.
  std::vector<std::size_t> component_of;
};

// Circular words, one per component, canonicalised as necklaces.
using CircularWordMultiset = NecklaceMultiset;

// Throws BadDimension when g has fewer than two entries.
bool validate_gvector(const GVector& g);

DyckDiagram to_dyck_diagram(const GVector& g);

Multislalom reconstruct_multislalom(const GVector& g);

CircularWordMultiset circular_words(const GVector& g);

// Deletes every letter 1; words that become empty are dropped.
NecklaceMultiset erase_ones(const CircularWordMultiset& m);

std::vector<GVector> component_gvectors(const GVector& g);

}  // namespace pcw

#endif  // PCW_DYCK_HPP

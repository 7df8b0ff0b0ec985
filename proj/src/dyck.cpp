#include "pcw/dyck.hpp"

#include <cstdlib>
#include <numeric>

#include "pcw/error.hpp"

namespace pcw {

namespace {

void require_valid(const GVector& g) {
  if (!validate_gvector(g)) {
    std::string text;
    for (std::size_t i = 0; i < g.size(); ++i) {
      text += (i ? "," : "") + std::to_string(g[i]);
    }
    throw Error(ErrorKind::InvalidGVector, "(" + text + ")");
  }
}

}  // namespace

std::vector<int> DyckDiagram::heights() const {
  std::vector<int> h{0};
  h.reserve(steps.size() + 1);
  for (const auto& s : steps) h.push_back(h.back() + (s.dir == StepDir::Up ? 1 : -1));
  return h;
}

std::string DyckDiagram::dyck_word() const {
  std::string out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.dir == StepDir::Up ? 'u' : 'd');
  return out;
}

bool validate_gvector(const GVector& g) {
  if (g.size() < 2) {
    throw Error(ErrorKind::BadDimension, "a g-vector needs n >= 2 entries");
  }
  long long prefix = 0;
  bool nonzero = false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    prefix += g[k];
    nonzero = nonzero || g[k] != 0;
    if (k + 1 < g.size() && prefix > 0) return false;
  }
  return prefix == 0 && nonzero;
}

DyckDiagram to_dyck_diagram(const GVector& g) {
  require_valid(g);
  DyckDiagram d;
  d.n = static_cast<int>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const StepDir dir = g[i] < 0 ? StepDir::Up : StepDir::Down;
    for (int k = 0; k < std::abs(g[i]); ++k) {
      d.steps.push_back({dir, static_cast<int>(i + 1)});
    }
  }
  return d;
}

Multislalom reconstruct_multislalom(const GVector& g) {
  Multislalom m;
  m.g = g;
  m.diagram = to_dyck_diagram(g);
  const auto& steps = m.diagram.steps;
  const std::size_t r = steps.size();

  // Nested matching: each down step closes the most recent open up step.
  m.partner.assign(r, 0);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < r; ++i) {
    if (steps[i].dir == StepDir::Up) {
      open.push_back(i);
    } else {
      m.partner[i] = open.back();
      m.partner[open.back()] = i;
      open.pop_back();
    }
  }

  // The copies are glued with opposite orientations, which reverses the
  // order of the steps inside each label block.
  m.mirror.assign(r, 0);
  for (std::size_t begin = 0; begin < r;) {
    std::size_t end = begin;
    while (end < r && steps[end].label == steps[begin].label) ++end;
    for (std::size_t k = begin; k < end; ++k) m.mirror[k] = begin + end - 1 - k;
    begin = end;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  m.component_of.assign(r, kNone);
  for (std::size_t start = 0; start < r; ++start) {
    if (m.component_of[start] != kNone) continue;
    SlalomComponent comp;
    comp.gvector.assign(g.size(), 0);
    std::size_t cur = start;
    do {
      m.component_of[cur] = m.components.size();
      comp.steps.push_back(cur);
      comp.arrivals.push_back(steps[cur].label);
      comp.gvector[static_cast<std::size_t>(steps[cur].label - 1)] +=
          steps[cur].dir == StepDir::Up ? -1 : 1;
      // Cross to the other copy, then follow the chord there.
      cur = m.partner[m.mirror[cur]];
    } while (cur != start);
    m.components.push_back(std::move(comp));
  }
  return m;
}

CircularWordMultiset circular_words(const GVector& g) {
  CircularWordMultiset out;
  for (const auto& comp : reconstruct_multislalom(g).components) {
    out.insert(Necklace(Word(comp.arrivals)));
  }
  return out;
}

NecklaceMultiset erase_ones(const CircularWordMultiset& m) {
  NecklaceMultiset out;
  for (const auto& [nk, mult] : m.entries()) {
    std::vector<int> kept;
    for (int x : nk.representative()) {
      if (x != 1) kept.push_back(x);
    }
    if (!kept.empty()) out.insert(Necklace(Word(std::move(kept))), mult);
  }
  return out;
}

std::vector<GVector> component_gvectors(const GVector& g) {
  std::vector<GVector> out;
  for (auto& comp : reconstruct_multislalom(g).components) {
    out.push_back(std::move(comp.gvector));
  }
  return out;
}

}  // namespace pcw

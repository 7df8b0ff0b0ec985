#include "pcw/gentle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcw/error.hpp"

namespace pcw {

namespace {

std::size_t walk_period(const std::vector<SignedStep>& s) {
  const std::size_t r = s.size();
  for (std::size_t p = 1; p < r; ++p) {
    if (r % p != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < r && fixed; ++i) fixed = s[i] == s[(i + p) % r];
    if (fixed) return p;
  }
  return r;
}

std::string token(const SignedStep& s) {
  std::string out = s.arrow.kind == ArrowKind::Alpha ? "a" : "b";
  out += std::to_string(s.arrow.index);
  if (s.inverse) out += "-";
  return out;
}

}  // namespace

bool is_relation(const Arrow& outer, const Arrow& inner) noexcept {
  return outer.index + 1 == inner.index && outer.kind != inner.kind;
}

std::string band_walk_defect(const std::vector<SignedStep>& steps, int n) {
  if (n < 2) return "n must be at least 2";
  const std::size_t r = steps.size();
  if (r < 2) return "a band walk has at least two letters";
  bool direct = false;
  bool inverse = false;
  for (const auto& s : steps) {
    if (s.arrow.index < 1 || s.arrow.index > n - 1) {
      return "arrow " + token(s) + " does not exist for n = " + std::to_string(n);
    }
    (s.inverse ? inverse : direct) = true;
  }
  if (!direct || !inverse) return "needs both direct and inverse letters";
  for (std::size_t k = 0; k < r; ++k) {
    const SignedStep& x = steps[k];
    const SignedStep& y = steps[(k + 1) % r];
    const std::string where = " at " + token(x) + " " + token(y);
    if (y.target() != x.source()) return "letters do not compose" + where;
    if (x == y.inverted()) return "letter followed by its inverse" + where;
    if (!x.inverse && !y.inverse && is_relation(x.arrow, y.arrow)) {
      return "zero relation" + where;
    }
    if (x.inverse && y.inverse && is_relation(y.arrow, x.arrow)) {
      return "inverse of a zero relation" + where;
    }
  }
  if (walk_period(steps) != r) return "walk is a proper power";
  return {};
}

bool validate_band_walk(const std::vector<SignedStep>& steps, int n) {
  return band_walk_defect(steps, n).empty();
}

BandWalk::BandWalk(std::vector<SignedStep> steps, int n)
    : steps_(std::move(steps)), n_(n) {
  if (auto defect = band_walk_defect(steps_, n_); !defect.empty()) {
    throw Error(ErrorKind::InvalidWalk, defect);
  }
}

BandWalk BandWalk::canonical() const {
  const std::size_t r = steps_.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      const auto& a = steps_[(k + i) % r];
      const auto& b = steps_[(best + i) % r];
      if (a == b) continue;
      if (a < b) best = k;
      break;
    }
  }
  std::vector<SignedStep> out(steps_);
  std::rotate(out.begin(), out.begin() + static_cast<long>(best), out.end());
  return BandWalk(std::move(out), n_);
}

std::vector<std::size_t> BandWalk::vertex_visits() const {
  std::vector<std::size_t> visits(static_cast<std::size_t>(n_), 0);
  for (const auto& s : steps_) ++visits[static_cast<std::size_t>(s.source() - 1)];
  return visits;
}

std::string BandWalk::to_string() const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += ' ';
    out += token(s);
  }
  return out;
}

std::vector<SignedStep> letter_cycle(int i) {
  if (i < 2) {
    throw Error(ErrorKind::LetterOutOfRange,
                "z_" + std::to_string(i) + " is not a band fragment");
  }
  std::vector<SignedStep> out;
  for (int k = 1; k < i; ++k) out.push_back({{ArrowKind::Alpha, k}, false});
  for (int k = i - 1; k >= 1; --k) out.push_back({{ArrowKind::Beta, k}, true});
  return out;
}

BandWalk psi(const Word& w, int n) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "psi");
  for (int x : w) {
    if (x < 2 || x > n) {
      throw Error(ErrorKind::LetterOutOfRange,
                  "letter " + std::to_string(x) + " outside 2.." + std::to_string(n));
    }
  }
  if (!is_primitive(w)) throw Error(ErrorKind::NonPrimitive, "psi");
  std::vector<SignedStep> steps;
  for (int x : w) {
    auto z = letter_cycle(x);
    steps.insert(steps.end(), z.begin(), z.end());
  }
  return BandWalk(std::move(steps), n);
}

BandModule::BandModule(int n, std::vector<std::size_t> dims,
                       std::vector<RationalMatrix> mats, Rational lambda)
    : n_(n), dims_(std::move(dims)), mats_(std::move(mats)), lambda_(std::move(lambda)) {
  if (n_ < 2) throw Error(ErrorKind::InvalidModule, "n must be at least 2");
  if (dims_.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::InvalidModule, "expected one dimension per vertex");
  }
  if (mats_.size() != 2 * static_cast<std::size_t>(n_ - 1)) {
    throw Error(ErrorKind::InvalidModule, "expected one matrix per arrow");
  }
  for (std::size_t s = 0; s < mats_.size(); ++s) {
    const Arrow a = arrow_at(s);
    if (mats_[s].rows() != dim(a.target()) || mats_[s].cols() != dim(a.source())) {
      throw Error(ErrorKind::InvalidModule, "matrix shape does not match dimensions");
    }
  }
  for (int i = 1; i + 1 < n_; ++i) {
    const Arrow ai{ArrowKind::Alpha, i};
    const Arrow bi{ArrowKind::Beta, i};
    const Arrow ai1{ArrowKind::Alpha, i + 1};
    const Arrow bi1{ArrowKind::Beta, i + 1};
    if (!(mat(bi) * mat(ai1)).is_zero() || !(mat(ai) * mat(bi1)).is_zero()) {
      throw Error(ErrorKind::InvalidModule,
                  "a zero relation fails at vertex " + std::to_string(i + 1));
    }
  }
}

std::size_t BandModule::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

std::size_t BandModule::slot(const Arrow& a) noexcept {
  return 2 * static_cast<std::size_t>(a.index - 1) + (a.kind == ArrowKind::Beta ? 1 : 0);
}

Arrow BandModule::arrow_at(std::size_t slot) noexcept {
  return {slot % 2 == 0 ? ArrowKind::Alpha : ArrowKind::Beta, static_cast<int>(slot / 2) + 1};
}

BandModule band_module(const BandWalk& z, const Rational& lambda) {
  if (lambda == 0) throw Error(ErrorKind::ZeroLambda, "lambda must be non-zero");
  const BandWalk c = z.canonical();
  const int n = c.n();
  const std::size_t r = c.length();

  // Walk order is the reverse of written order; basis vector j lives at the
  // source of the j-th walked step.
  std::vector<SignedStep> walked(c.steps().rbegin(), c.steps().rend());
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> local(r);
  for (std::size_t j = 0; j < r; ++j) {
    local[j] = dims[static_cast<std::size_t>(walked[j].source() - 1)]++;
  }

  std::vector<RationalMatrix> mats;
  for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(n - 1); ++s) {
    const Arrow a = BandModule::arrow_at(s);
    mats.emplace_back(dims[static_cast<std::size_t>(a.target() - 1)],
                      dims[static_cast<std::size_t>(a.source() - 1)]);
  }
  for (std::size_t j = 0; j < r; ++j) {
    const SignedStep& step = walked[j];
    const std::size_t next = (j + 1) % r;
    RationalMatrix& m = mats[BandModule::slot(step.arrow)];
    const Rational coef = j + 1 == r ? lambda : Rational(1);
    if (step.inverse) {
      m(local[j], local[next]) = coef;
    } else {
      m(local[next], local[j]) = coef;
    }
  }
  try {
    return BandModule(n, std::move(dims), std::move(mats), lambda);
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalInconsistency, e.what());
  }
}

BandModule direct_sum(const std::vector<BandModule>& summands) {
  if (summands.empty()) throw Error(ErrorKind::InvalidModule, "empty direct sum");
  const int n = summands.front().n();
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  for (const auto& m : summands) {
    if (m.n() != n) throw Error(ErrorKind::DimensionMismatch, "direct_sum");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += m.dims()[v];
  }
  std::vector<RationalMatrix> mats;
  for (std::size_t s = 0; s < 2 * static_cast<std::size_t>(n - 1); ++s) {
    const Arrow a = BandModule::arrow_at(s);
    RationalMatrix big(dims[static_cast<std::size_t>(a.target() - 1)],
                       dims[static_cast<std::size_t>(a.source() - 1)]);
    std::size_t row0 = 0;
    std::size_t col0 = 0;
    for (const auto& m : summands) {
      const RationalMatrix& blk = m.mats()[s];
      for (std::size_t i = 0; i < blk.rows(); ++i) {
        for (std::size_t j = 0; j < blk.cols(); ++j) big(row0 + i, col0 + j) = blk(i, j);
      }
      row0 += blk.rows();
      col0 += blk.cols();
    }
    mats.push_back(std::move(big));
  }
  return BandModule(n, std::move(dims), std::move(mats));
}

std::size_t hom_dim(const BandModule& m, const BandModule& n) {
  if (m.n() != n.n()) {
    throw Error(ErrorKind::DimensionMismatch, "modules over different algebras");
  }
  const int verts = m.n();
  // Unknown f_v is an N.dim(v) x M.dim(v) block, stored row-major.
  std::vector<std::size_t> offset(static_cast<std::size_t>(verts) + 1, 0);
  for (int v = 1; v <= verts; ++v) {
    offset[static_cast<std::size_t>(v)] =
        offset[static_cast<std::size_t>(v - 1)] + n.dim(v) * m.dim(v);
  }
  auto unknown = [&](int v, std::size_t a, std::size_t b) {
    return offset[static_cast<std::size_t>(v - 1)] + a * m.dim(v) + b;
  };

  SparseEliminator elim(offset.back());
  std::vector<SparseEntry> row;
  for (std::size_t s = 0; s < m.mats().size(); ++s) {
    const Arrow g = BandModule::arrow_at(s);
    const int i = g.source();
    const int j = g.target();
    const RationalMatrix& mg = m.mat(g);  // M.dim(j) x M.dim(i)
    const RationalMatrix& ng = n.mat(g);  // N.dim(j) x N.dim(i)

    std::vector<std::vector<std::size_t>> m_col(mg.cols());
    for (std::size_t k = 0; k < mg.rows(); ++k) {
      for (std::size_t b = 0; b < mg.cols(); ++b) {
        if (mg(k, b) != 0) m_col[b].push_back(k);
      }
    }
    std::vector<std::vector<std::size_t>> n_row(ng.rows());
    for (std::size_t a = 0; a < ng.rows(); ++a) {
      for (std::size_t k = 0; k < ng.cols(); ++k) {
        if (ng(a, k) != 0) n_row[a].push_back(k);
      }
    }
    // Entry (a, b) of f_j M_g - N_g f_i.
    for (std::size_t a = 0; a < n.dim(j); ++a) {
      for (std::size_t b = 0; b < m.dim(i); ++b) {
        row.clear();
        for (std::size_t k : m_col[b]) row.emplace_back(unknown(j, a, k), mg(k, b));
        for (std::size_t k : n_row[a]) row.emplace_back(unknown(i, k, b), -ng(a, k));
        if (!row.empty()) elim.add_row(row);
      }
    }
  }
  return elim.nullity();
}

bool is_brick(const BandModule& m) { return hom_dim(m, m) == 1; }

std::size_t ext1_dim(const BandModule& x, const BandModule& y) { return hom_dim(y, x); }

GVector g_vector_of_band(const BandWalk& z) {
  GVector g(static_cast<std::size_t>(z.n()), 0);
  const auto& s = z.steps();
  for (std::size_t k = 0; k < s.size(); ++k) {
    const SignedStep& x = s[k];
    const SignedStep& y = s[(k + 1) % s.size()];
    auto& entry = g[static_cast<std::size_t>(x.source() - 1)];
    if (!x.inverse && y.inverse) ++entry;
    if (x.inverse && !y.inverse) --entry;
  }
  return g;
}

BandWalk slalom_to_band_walk(const Multislalom& m, std::size_t component) {
  if (component >= m.components.size()) {
    throw Error(ErrorKind::InvalidComponent, "no component " + std::to_string(component));
  }
  const auto& idx = m.components[component].steps;
  const auto& steps = m.diagram.steps;
  const std::size_t len = idx.size();
  auto first_up = std::find_if(idx.begin(), idx.end(), [&](std::size_t i) {
    return steps[i].dir == StepDir::Up;
  });
  if (len < 2 || len % 2 != 0 || first_up == idx.end()) {
    throw Error(ErrorKind::InvalidComponent, "component does not alternate");
  }
  const std::size_t shift = static_cast<std::size_t>(first_up - idx.begin());

  // Walk order: from an up label u climb to the next down label d along
  // beta_u^-1 ... beta_{d-1}^-1, then descend along alpha_{d-1} ... alpha_{u'}.
  std::vector<SignedStep> walked;
  for (std::size_t k = 0; k < len; k += 2) {
    const DyckStep& up = steps[idx[(shift + k) % len]];
    const DyckStep& down = steps[idx[(shift + k + 1) % len]];
    const DyckStep& next_up = steps[idx[(shift + k + 2) % len]];
    if (up.dir != StepDir::Up || down.dir != StepDir::Down ||
        next_up.dir != StepDir::Up || up.label >= down.label ||
        next_up.label >= down.label) {
      throw Error(ErrorKind::InvalidComponent, "component does not alternate");
    }
    for (int i = up.label; i < down.label; ++i) walked.push_back({{ArrowKind::Beta, i}, true});
    for (int i = down.label - 1; i >= next_up.label; --i) {
      walked.push_back({{ArrowKind::Alpha, i}, false});
    }
  }
  std::vector<SignedStep> written(walked.rbegin(), walked.rend());
  if (auto defect = band_walk_defect(written, m.diagram.n); !defect.empty()) {
    throw Error(ErrorKind::InvalidComponent, defect);
  }
  return BandWalk(std::move(written), m.diagram.n);
}

}  // namespace pcw

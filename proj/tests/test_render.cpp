#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "pcw/dyck.hpp"
#include "pcw/render.hpp"

using namespace pcw;

namespace {

struct Chord {
  int component;
  double x1, y1, x2, y2;
};

std::vector<Chord> chords(const std::string& svg) {
  static const std::regex re(
      R"re(<line class="chord" data-component="(\d+)" stroke="[^"]+" x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)"/>)re");
  std::vector<Chord> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it) {
    const auto& m = *it;
    out.push_back({std::stoi(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4]), std::stod(m[5])});
  }
  return out;
}

std::vector<int> labels(const std::string& svg) {
  static const std::regex re(R"(<text [^>]*>(\d+)</text>)");
  std::vector<int> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it) {
    out.push_back(std::stoi((*it)[1]));
  }
  return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Oracle: matched pairs and chord heights from the up/down word alone, in the
// renderer's pixel frame (one cell of margin, y growing downwards).
std::vector<Chord> expected_chords(const GVector& g, double unit) {
  std::string word;
  for (int x : g) word.append(static_cast<std::size_t>(std::abs(x)), x < 0 ? 'u' : 'd');
  int top = 0;
  int h = 0;
  for (char c : word) top = std::max(top, h += c == 'u' ? 1 : -1);
  std::vector<Chord> out;
  std::vector<std::pair<std::size_t, int>> open;
  h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'u') {
      open.emplace_back(i, h++);
      continue;
    }
    --h;
    const auto [p, base] = open.back();
    open.pop_back();
    const double y = unit * (1 + top - (base + 0.5));
    out.push_back({0, unit * (1.5 + static_cast<double>(p)), y, unit * (1.5 + static_cast<double>(i)), y});
  }
  return out;
}

bool same_geometry(std::vector<Chord> a, std::vector<Chord> b) {
  auto key = [](const Chord& c) { return std::tie(c.x1, c.x2); };
  auto by = [&](const Chord& l, const Chord& r) { return key(l) < key(r); };
  std::sort(a.begin(), a.end(), by);
  std::sort(b.begin(), b.end(), by);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto [u, v] : {std::pair{a[i].x1, b[i].x1}, {a[i].x2, b[i].x2}, {a[i].y1, b[i].y1}, {a[i].y2, b[i].y2}}) {
      if (std::abs(u - v) > 0.01) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("two-component drawing") {
  const GVector g{-3, -1, 3, -2, 3};
  const std::string svg = render_dyck(g);
  const auto cs = chords(svg);
  CHECK(cs.size() == 6);
  std::set<int> colours;
  for (const auto& c : cs) colours.insert(c.component);
  CHECK(colours == std::set<int>{0, 1});
  CHECK(labels(svg) == std::vector<int>{1, 1, 1, 2, 3, 3, 3, 4, 4, 5, 5, 5});
  CHECK(same_geometry(cs, expected_chords(g, 32)));
}

TEST_CASE("single chord sits half a cell above the path") {
  const std::string svg = render_dyck({-1, 1});
  const auto cs = chords(svg);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].y1 == doctest::Approx(48));
  CHECK(cs[0].x1 == doctest::Approx(48));
  CHECK(cs[0].x2 == doctest::Approx(80));
  CHECK(cs[0].component == 0);
}

TEST_CASE("chord geometry agrees with the oracle") {
  for (const GVector& g : {GVector{-1, -1, 2}, GVector{-4, 3, -2, 3}, GVector{-8, 2, 2, 4},
                           GVector{-2, -1, -3, 6}, GVector{-3, 1, -1, 3}}) {
    RenderOptions o;
    o.unit = 20;
    CHECK(same_geometry(chords(render_dyck(g, o)), expected_chords(g, 20)));
  }
}

TEST_CASE("chord colours follow the components") {
  const GVector g{-8, 2, 2, 4};
  const Multislalom m = reconstruct_multislalom(g);
  const auto cs = chords(render_dyck(g));
  std::set<int> used;
  for (const auto& c : cs) used.insert(c.component);
  CHECK(used.size() <= m.components.size());
  CHECK(*used.rbegin() < static_cast<int>(m.components.size()));
}

TEST_CASE("output is deterministic and well formed") {
  const GVector g{-3, -1, 3, -2, 3};
  const std::string a = render_dyck(g);
  CHECK(a == render_dyck(g));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(count(a, "<svg") == 1);
  CHECK(count(a, "</svg>") == 1);
  CHECK(count(a, "<g ") == count(a, "</g>"));
  CHECK(count(a, "<text") == count(a, "</text>"));

  RenderOptions other;
  other.palette_seed = 3;
  const std::string b = render_dyck(g, other);
  CHECK(a != b);
  CHECK(chords(a).size() == chords(b).size());

  RenderOptions wide;
  wide.width = 640;
  CHECK(render_dyck(g, wide).find("width=\"640\"") != std::string::npos);
}

TEST_CASE("golden drawing") {
  std::ifstream in(PCW_TEST_DATA "/golden_render.svg");
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(render_dyck({-3, -1, 3, -2, 3}) == buf.str());
}

#include "pcw/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "pcw/error.hpp"

namespace pcw {

namespace {

constexpr std::array<const char*, 8> kPalette{
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
};

// Colours beyond the base palette come from evenly spread hues.
std::string component_colour(std::size_t k, std::uint32_t seed) {
  if (k < kPalette.size()) return kPalette[(k + seed) % kPalette.size()];
  const double hue = std::fmod(static_cast<double>(k + seed) * 137.508, 360.0);
  std::ostringstream out;
  out << "hsl(" << std::fixed << std::setprecision(1) << hue << ",65%,45%)";
  return out.str();
}

// Fixed two-decimal formatting with trailing zeros trimmed.
std::string num(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  std::string s = out.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string render_dyck(const GVector& g, const RenderOptions& options) {
  const Multislalom m = reconstruct_multislalom(g);
  const auto& steps = m.diagram.steps;
  const std::vector<int> h = m.diagram.heights();
  const int cols = static_cast<int>(steps.size());
  const int rows = *std::max_element(h.begin(), h.end());

  const double margin = 1.0;  // in cells
  double unit = options.unit;
  if (options.width > 0) unit = options.width / (cols + 2 * margin);
  if (!(unit > 0)) throw Error(ErrorKind::BadDimension, "unit must be positive");

  const double width = (cols + 2 * margin) * unit;
  const double height = (rows + 2 * margin) * unit;
  auto px = [&](double x) { return num((x + margin) * unit); };
  auto py = [&](double y) { return num((rows - y + margin) * unit); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
      << num(height) << "\">\n";
  svg << "<title>Dyck path model for g = (";
  for (std::size_t i = 0; i < g.size(); ++i) svg << (i ? "," : "") << g[i];
  svg << ")</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int x = 0; x <= cols; ++x) {
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x)
        << "\" y2=\"" << py(rows) << "\"/>\n";
  }
  for (int y = 0; y <= rows; ++y) {
    svg << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(cols)
        << "\" y2=\"" << py(y) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int x = 0; x <= cols; ++x) {
    svg << (x ? " " : "") << px(x) << ',' << py(h[static_cast<std::size_t>(x)]);
  }
  svg << "\"/>\n";

  // Up labels sit left of their step, down labels right, as in hand drawings.
  const double font = unit * 0.45;
  svg << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(font)
      << "\" text-anchor=\"middle\">\n";
  for (int k = 0; k < cols; ++k) {
    const auto& s = steps[static_cast<std::size_t>(k)];
    const double mid = h[static_cast<std::size_t>(k)] + (s.dir == StepDir::Up ? 0.5 : -0.5);
    const double dx = s.dir == StepDir::Up ? 0.15 : 0.85;
    svg << "<text x=\"" << px(k + dx) << "\" y=\"" << py(mid + 0.35) << "\">" << s.label
        << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"chords\" stroke-width=\"2.5\">\n";
  for (std::size_t p = 0; p < steps.size(); ++p) {
    if (steps[p].dir != StepDir::Up) continue;
    const std::size_t q = m.partner[p];
    const double y = h[p] + 0.5;
    // On the first copy a chord is entered through its down end.
    const std::size_t c = m.component_of[q];
    svg << "<line class=\"chord\" data-component=\"" << c << "\" stroke=\""
        << component_colour(c, options.palette_seed) << "\" x1=\""
        << px(static_cast<double>(p) + 0.5) << "\" y1=\"" << py(y) << "\" x2=\""
        << px(static_cast<double>(q) + 0.5) << "\" y2=\"" << py(y) << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace pcw

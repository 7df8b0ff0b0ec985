#ifndef PCW_RENDER_HPP
#define PCW_RENDER_HPP

#include <cstdint>
#include <string>

#include "pcw/dyck.hpp"

namespace pcw {

struct RenderOptions {
  // Target drawing width in px; 0 keeps unit as given.
  double width = 0;
  // Side of one grid cell in px.
  double unit = 32;
  // Rotates the component colour palette.
  std::uint32_t palette_seed = 0;
};

// Standalone SVG of the labelled Dyck path with one chord per matched pair,
// coloured by the component using it on the first polygon copy. Equal inputs
// give byte-identical output.
std::string render_dyck(const GVector& g, const RenderOptions& options = {});

}  // namespace pcw

#endif  // PCW_RENDER_HPP

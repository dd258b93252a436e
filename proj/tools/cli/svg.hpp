#pragma once

#include <string>
#include <vector>

#include "galtrop/complex.hpp"

namespace galtrop::cli {

struct SvgOptions {
  double clip = 6.0;       // rays end on the square [-clip, clip]^2
  double scale = 40.0;     // pixels per unit
};

/// SVG 1.1 picture of a rank-2 complex. `orbit_of` gives a color class per entry of
/// one_cells(); uncapped rays use class 0. Output is byte-identical for identical input.
std::string render_svg(const TropicalComplex& c, const std::vector<int>& orbit_of, const SvgOptions& options);

}  // namespace galtrop::cli

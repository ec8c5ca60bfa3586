#pragma once

#include "illumcover/covering.hpp"

#include <string>

namespace illumcover {

// T^2 as the unit square; every cube drawn as up to four wrapped rectangles
// with a distinct 40%-opacity fill, base points marked. Byte-deterministic
// for a fixed input. An uncovered certificate adds a witness marker.
std::string emit_svg(const CubeCover& cover);

// Fraction of pixel centers (resolution^2 samples) lying inside at least one
// drawn rectangle; geometry identical to emit_svg's.
double svg_coverage_fraction(const CubeCover& cover, int resolution);

}  // namespace illumcover

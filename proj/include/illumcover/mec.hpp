#pragma once

#include "illumcover/common.hpp"

#include <complex>
#include <vector>

namespace illumcover {

using Cx = std::complex<double>;

struct Circle {
    Cx center{0.0, 0.0};
    double radius = 0.0;
};

// Smallest circle containing all points (incremental construction, input
// order; deterministic). Feasibility kernel for the refinement step: the
// intersection of open unit discs centered at the points is non-empty iff
// the radius here is < 1, and the center is then a common point.
Circle min_enclosing_circle(const std::vector<Cx>& points);

bool circle_contains(const Circle& c, const Cx& p, double slack = 1e-12);

}  // namespace illumcover

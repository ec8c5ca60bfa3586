#pragma once

#include "illumcover/covering.hpp"

#include <optional>

namespace illumcover {

// A point of D0^n = (unit circle)^n stored through its phase vector:
// coordinate j is e^{2 pi i theta_j}.
struct ExtremalDirection {
    TorusPoint phases;
    int dim() const { return phases.dim(); }
};

struct LightSource {
    TorusPoint phases;
    double radius = 2.0;  // > 1, the source sits on r * D0^n
};

struct TorusCube {
    TorusPoint base;
    Rat side;
    bool contains(const TorusPoint& x) const;
};

// The set of extreme points illuminated by direction v, viewed on T^n:
// the open cube of side 1/2 based at phases(v) + (1/4,...,1/4).
TorusCube illuminated_cube(const ExtremalDirection& v);
bool illuminates(const ExtremalDirection& v, const ExtremalDirection& x);

// Inverse of illuminated_cube over a whole cover with side 1/2.
std::vector<ExtremalDirection> direction_set_from_cover(const CubeCover& cover);

// Coordinate-wise normalization of a general direction onto D0^n: phase of
// v_j/|v_j| rounded to denominator `den`. Zero coordinates illuminate
// nothing and are rejected.
ExtremalDirection extremal_from_vector(const std::vector<std::complex<double>>& v,
                                       long long den = 1000000000);

// ill(D^n) = 2^(n+1)-1 and ill*(D^n) = 2^n.
Int illumination_number_polydisc(int n);
Int fractional_number_polydisc(int n);

// eps_r = arccos(1/r)/pi; the torus cube side matching light sources on
// r * D0^n.
double light_source_side(double r);

// r values with eps_r = 1/m exactly (r = 1/cos(pi/m)); nullopt otherwise.
std::optional<int> unit_fraction_side(double r);

Ternary light_source_illuminates(const LightSource& s, const ExtremalDirection& x,
                                 double margin = kDefaultMargin);

struct LightSourceCount {
    double eps;
    Int lower;
    std::optional<Int> exact;
    std::optional<Int> upper;
};

// Lower bound a_n(eps_r) always; exact value via the unit-fraction detection
// or the closed 2d/3d formulas when they decide; optional upper bound from a
// grid search at resolution q (0 disables).
LightSourceCount light_source_number(int n, double r, int search_grid = 0,
                                     long long node_budget = 1000000);

// Illumination of x by v through the inner-product condition (exact in the
// rational phases): <x_j, v_j> < 0 for every coordinate.
bool illuminated_by_inner_product(const ExtremalDirection& v, const ExtremalDirection& x);

// Same predicate through an explicit interior ray: some t in {2^-1..2^-20}
// puts every coordinate of x + t v strictly inside the disc.
bool illuminated_by_ray(const ExtremalDirection& v, const ExtremalDirection& x);

}  // namespace illumcover

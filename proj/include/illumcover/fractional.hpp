#pragma once

#include "illumcover/covering.hpp"

#include <vector>

namespace illumcover {

// Non-negative weights on the (Z/k)^n grid.
struct GridMeasure {
    int n = 0;
    int k = 0;
    std::vector<Rat> weights;  // k^n entries, row-major

    Rat total_mass() const;
};

// N*(T^n,(0,eps)^n) = (1/eps)^n.
Rat fractional_covering_number(int n, const Rat& eps);
double fractional_covering_number_f(int n, double eps);

struct UniformMeasureReport {
    Rat total_mass;
    bool analytic_ok = false;   // window mass = eps^n * eps^-n = 1, exactly
    int samples_checked = 0;
    bool samples_ok = false;    // exact window volumes at random translates
};

UniformMeasureReport uniform_measure_certificate(int n, const Rat& eps, int samples = 100,
                                                 std::uint64_t seed = 1);

struct LpReport {
    Rat primal;       // recovered covering weights, feasibility verified
    Rat dual;         // simplex objective
    Rat gap;          // primal - dual, exact
    bool grid_aligned = false;
    long long pivots = 0;
    GridMeasure measure;
};

// Finite LP relaxation: weights on grid points, covering constraints at the
// cell midpoints of the grid. Grid-aligned (k*eps integral) instances attain
// (1/eps)^n exactly.
LpReport lp_fractional_cover(int n, const Rat& eps, int k);

// Window masses of the measure at every cell midpoint; the feasibility side
// of the covering-measure definition, usable as an independent check.
bool grid_measure_feasible(const GridMeasure& mu, const Rat& eps);

}  // namespace illumcover

#pragma once

#include "illumcover/mec.hpp"
#include "illumcover/torus.hpp"

#include <optional>
#include <vector>

namespace illumcover {

using CxVec = std::vector<Cx>;

enum class Field { Real, Complex };

// Zonotope Z(a_1..a_N): Minkowski sum of segments [-1,1]a_j (real) or discs
// D a_j (complex). Real generators are embedded with zero imaginary parts.
struct Generators {
    Field field = Field::Real;
    int n = 0;
    std::vector<CxVec> vecs;
};

// n+1 generators with a {0,1} dependence summing to zero; the last three
// dependence coefficients are 1. Points are handled through coefficient
// vectors relative to gens.
struct CanonicalZonotope {
    Field field = Field::Real;
    int n = 0;
    std::vector<CxVec> gens;    // n+1 vectors
    std::vector<int> lambda;    // n+1 zero/one flags
    double dependence_residual = 0.0;
};

struct Direction {
    CxVec coeffs;   // length n+1, relative to the canonical generators
    CxVec ambient;  // length n
    double weight = 1.0;
};

struct DirectionSet {
    int n = 0;
    std::vector<Direction> dirs;
};

struct IlluminationWitness {
    int dir_index = -1;
    double t = 0.0;
    Cx delta{0.0, 0.0};
    CxVec coeffs;     // y_j = x_j + t v_j + delta lambda_j, all |y_j| < 1
    double max_mod = 0.0;
};

// Exact-rational witness produced by the explicit real construction.
struct RationalWitness {
    int dir_index = -1;
    Rat t;
    Rat delta;
    std::vector<Rat> coeffs;
    Rat max_abs;
};

// Merges parallel generators, selects a basis plus one extra generator, and
// rescales (real) or rotates (complex) so the dependence coefficients become
// 0/1 with the guaranteed three in the last slots. The result's illumination
// numbers dominate the input's.
CanonicalZonotope reduce_to_canonical(const Generators& g);

Generators generators_of(const CanonicalZonotope& K);

// F + V from the hexagon construction: 3 * 2^(n-2) directions illuminating
// every sign vertex.
DirectionSet real_illuminating_set(const CanonicalZonotope& K);

// The construction's explicit witness for a sign vertex (entries +-1),
// exact rational arithmetic; dir_index refers to real_illuminating_set order.
RationalWitness real_witness_for(const std::vector<int>& lambda, const std::vector<int>& signs);

// V1 (sub-polydisc directions on a_1..a_{n-1}) united with V3 (shifted
// directions built on a_1..a_{n-2},a_n); 2(2^n - 1) directions in total.
DirectionSet complex_illuminating_set(const CanonicalZonotope& K);

// Decides whether some t in the geometric grid {2^-k} and some scalar delta
// give |x_j + t v_j + delta lambda_j| < 1 for all j. Coordinates with
// lambda_j = 0 are checked directly; the delta feasibility over the others is
// the minimum enclosing circle of -(x_j + t v_j) having radius < 1.
std::optional<IlluminationWitness> illuminates_canonical(const CxVec& x, const CxVec& v,
                                                         const std::vector<int>& lambda,
                                                         int t_depth = 30,
                                                         double margin = kDefaultMargin);

struct IlluminationReport {
    bool pass = false;
    long long candidates = 0;
    std::optional<CxVec> first_unilluminated;
};

// Scans extreme candidates whose coefficients are q-th roots of unity
// (complex field) or signs (real field) and looks for a witness per point.
IlluminationReport verify_illumination(const CanonicalZonotope& K, const DirectionSet& dirs, int q,
                                       int threads = 1, int t_depth = 30,
                                       double margin = kDefaultMargin);

// The half-circle arc measure: each direction of the real illuminating set
// of Z_R(a_1..a_{n+1}) smeared uniformly over {e^{i theta} y : theta in
// (0,pi)} with unit mass. Total mass 3 * 2^(n-2) < 2^n.
struct ArcMeasure {
    DirectionSet arcs;
    double total_mass = 0.0;
};

ArcMeasure fractional_measure(const CanonicalZonotope& K);

struct ThetaCheckResult {
    int samples = 0;
    int passed = 0;           // samples with illuminated fraction >= threshold
    double min_fraction = 1.0;
};

// Monte-Carlo check that for random extreme points the rotation angles theta
// whose rotated set illuminates the point fill out (0,pi): samples random x,
// scans a theta grid avoiding orthogonal pairs, and reports the fraction
// illuminated per sample.
ThetaCheckResult theta_full_measure_check(const CanonicalZonotope& K, const ArcMeasure& mu,
                                          int n_samples, int theta_grid, double threshold = 0.95,
                                          std::uint64_t seed = 7);

}  // namespace illumcover

#pragma once

#include "illumcover/torus.hpp"

#include <optional>
#include <vector>

namespace illumcover {

enum class Mode { Exact, Float };

enum class Verdict { Covered, Uncovered };

struct CoverCertificate {
    Verdict verdict = Verdict::Covered;
    std::optional<TorusPoint> witness;      // exact mode
    std::vector<double> witness_f;          // float mode
    long long candidate_grid_size = 0;
    Mode mode = Mode::Exact;
    double margin = 0.0;
};

// A union of open cubes base + (0, side)^n on the torus. Exact covers carry
// rational bases/side; float covers (irrational side such as eps_r) carry
// doubles plus the comparison margin.
struct CubeCover {
    int dim = 0;
    Mode mode = Mode::Exact;
    Rat side = Rat(1, 2);
    double side_f = 0.5;
    double margin = kDefaultMargin;
    std::vector<TorusPoint> bases;
    std::vector<std::vector<double>> bases_f;
    std::optional<CoverCertificate> certificate;

    std::size_t size() const { return mode == Mode::Exact ? bases.size() : bases_f.size(); }
};

// Explicit cover of size (m^(n+1)-1)/(m-1) with side 1/m: bases
// (u, mu, ..., m^(n-1) u) over u = k/b0.
CubeCover construct_cover(int n, int m);

// Decides coverage over the finite arrangement grid: per axis, cube endpoints
// plus the midpoint of every arc between cyclically consecutive endpoints.
// The open-cube membership pattern is constant on each cell of the product
// arrangement, so this grid is a sound and complete test set.
// Throws FloatModeInconclusive when a float-mode grid point cannot be
// classified at the configured margin.
CoverCertificate verify_cover(const CubeCover& cover, int threads = 1);

// Direct membership, independent of the grid machinery.
bool cube_contains(const TorusPoint& base, const Rat& side, const TorusPoint& x);
bool cover_contains(const CubeCover& cover, const TorusPoint& x);
Ternary cube_contains_f(const std::vector<double>& base, double side, const std::vector<double>& x,
                        double margin);

// (m^(n+1)-1)/(m-1), exact.
Int lower_bound_unit_fraction(int n, int m);

// a_0 = 1, a_{k+1} = floor(a_k/eps) + 1; lower bound for N(T^n,(0,eps)^n).
Int lower_bound_recurrence(int n, const Rat& eps);
// Conservative float-side variant: rounds eps up so the result stays a valid
// lower bound for the true side length.
Int lower_bound_recurrence_f(int n, double eps);

// b_0 = 1, b_{k+1} = ceil(b_k/eps); lower bound for closed cubes [0,eps]^n.
Int closed_cube_lower_bound(int n, const Rat& eps);

// N(T^2,(0,eps)^2) = floor((1/eps)(floor(1/eps)+1)) + 1, exact.
Int exact_value_2d(const Rat& eps);

// Piecewise table for N(T^3,(0,eps)^3); nullopt where the table has a gap.
std::optional<Int> exact_value_3d(const Rat& eps);
// Float entry point; nullopt also when eps is within margin of an interval
// endpoint (membership undecidable from a float).
std::optional<Int> exact_value_3d_f(double eps, double margin = kDefaultMargin);

struct SearchResult {
    CubeCover cover;
    bool proven_minimal = false;
    long long nodes = 0;
};

// Exact branch-and-bound set cover over bases restricted to the (Z/q)^n grid.
// Result size is an upper bound for N(T^n,(0,eps)^n); equality holds whenever
// it matches lower_bound_recurrence or a tabulated exact value.
SearchResult search_minimal_cover(int n, const Rat& eps, int q, long long node_budget = 1000000);
SearchResult search_minimal_cover_f(int n, double eps, int q, double margin = kDefaultMargin,
                                    long long node_budget = 1000000);

}  // namespace illumcover

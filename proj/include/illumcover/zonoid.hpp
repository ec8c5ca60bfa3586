#pragma once

#include "illumcover/zonotope.hpp"

#include <vector>

namespace illumcover {

// Finite-atom representing measure on the unit sphere of C^n; the support
// function is h(theta) = sum_k w_k |<x_k, theta>|.
struct DiscreteZonoid {
    int n = 0;
    std::vector<CxVec> atoms;     // unit vectors
    std::vector<double> weights;  // positive
};

// Validates (normalizing atoms to unit length, rejecting zeros/nonpositive
// weights) and assembles the zonoid.
DiscreteZonoid make_discrete_zonoid(int n, std::vector<CxVec> atoms, std::vector<double> weights);

Cx complex_inner(const CxVec& a, const CxVec& b);
double real_inner(const CxVec& a, const CxVec& b);

double support_function(const DiscreteZonoid& z, const CxVec& theta);

struct IdentityReport {
    double lhs = 0.0;  // |<x,y>_C|
    double rhs = 0.0;  // (1/4) integral of |<e^{it}x, y>_R|
    double error = 0.0;
};

// Quadrature check of the averaging identity between the two inner products.
// Simpson on smooth segments split at the integrand's zeros, about q nodes.
IdentityReport complex_real_identity_check(const CxVec& x, const CxVec& y, int q);

// Turns a real-zonoid representing measure into the complex one produced by
// rotation averaging: same atoms, weights scaled by 4/(2 pi).
DiscreteZonoid rotation_average(const DiscreteZonoid& real_zonoid);

// t-average of the real support evaluations at theta, by quadrature; equals
// support_function(rotation_average(z), theta) up to quadrature error.
double averaged_real_support(const DiscreteZonoid& real_zonoid, const CxVec& theta, int q);

struct Cluster {
    int representative = 0;        // atom index giving a_j
    std::vector<int> members;      // atom indices, pairwise disjoint across clusters
};

struct SummandResult {
    Generators zonotope;           // K = Z_C(a_1..a_{n+1})
    DiscreteZonoid summand_scaled; // Z_1 / m
    double m = 0.0;                // min_j mu(U_j)
    double hausdorff_estimate = 0.0;
    bool within_delta = false;
    bool summand_ok = false;       // mu_1 <= mu atomwise
};

// The zonotope-summand approximation: reweights each cluster to mass m,
// scales by 1/m and compares support functions against the zonotope on the
// cluster representatives over a sampled sphere.
SummandResult summand_extraction(const DiscreteZonoid& z, const std::vector<Cluster>& clusters,
                                 double delta, int theta_samples = 10000);

// Deterministic low-discrepancy sample of the unit sphere of C^n (Halton
// sequence through Box-Muller, normalized).
std::vector<CxVec> sphere_sample(int n, int count, std::uint64_t skip = 0);

}  // namespace illumcover

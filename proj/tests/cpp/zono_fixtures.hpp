#pragma once

// Random canonical zonotope fixtures shared by the unit and acceptance
// suites.

#include "illumcover/zonotope.hpp"

#include <cmath>

namespace illumcover::testing {

inline double det_abs(std::vector<CxVec> m) {
    const int n = static_cast<int>(m.size());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12) return 0.0;
        std::swap(m[col], m[piv]);
        det *= std::abs(m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            Cx f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Canonical zonotope with rational generators: a random integer basis, a
// random 0/1 dependence whose last three entries are ones, and the extra
// generator defined as minus the flagged sum.
inline CanonicalZonotope random_real_canonical(SplitMix64& rng, int n) {
    while (true) {
        CanonicalZonotope K;
        K.field = Field::Real;
        K.n = n;
        K.gens.assign(n + 1, CxVec(n, Cx(0, 0)));
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c)
                K.gens[j][c] = Cx(double(int(rng.below(9)) - 4), 0.0);
        std::vector<CxVec> basis(K.gens.begin(), K.gens.begin() + n);
        if (det_abs(basis) < 0.5) continue;

        K.lambda.assign(n + 1, 0);
        for (int j = 0; j < n - 2; ++j) K.lambda[j] = int(rng.below(2));
        K.lambda[n - 2] = K.lambda[n - 1] = K.lambda[n] = 1;
        for (int j = 0; j < n; ++j)
            if (K.lambda[j])
                for (int c = 0; c < n; ++c) K.gens[n][c] -= K.gens[j][c];
        K.dependence_residual = 0.0;
        return K;
    }
}

inline CanonicalZonotope random_complex_canonical(SplitMix64& rng, int n) {
    while (true) {
        CanonicalZonotope K;
        K.field = Field::Complex;
        K.n = n;
        K.gens.assign(n + 1, CxVec(n, Cx(0, 0)));
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c)
                K.gens[j][c] =
                    Cx(double(int(rng.below(7)) - 3), double(int(rng.below(7)) - 3));
        std::vector<CxVec> basis(K.gens.begin(), K.gens.begin() + n);
        if (det_abs(basis) < 0.5) continue;

        K.lambda.assign(n + 1, 0);
        for (int j = 0; j < n - 2; ++j) K.lambda[j] = int(rng.below(2));
        K.lambda[n - 2] = K.lambda[n - 1] = K.lambda[n] = 1;
        for (int j = 0; j < n; ++j)
            if (K.lambda[j])
                for (int c = 0; c < n; ++c) K.gens[n][c] -= K.gens[j][c];
        K.dependence_residual = 0.0;
        return K;
    }
}

}  // namespace illumcover::testing

#pragma once

// Internal helpers shared by the cover verifier and the set-cover search.

#include "illumcover/torus.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace illumcover::detail {

inline Rat wrap1(const Rat& r) { return UnitRat::wrap(r).value; }

inline double wrap1f(double x) {
    double y = x - std::floor(x);
    if (y >= 1.0) y -= 1.0;
    if (y < 0.0) y += 1.0;
    return y;
}

// Endpoint values plus the midpoint of every arc between cyclically
// consecutive endpoints, sorted. One representative per cell of the induced
// arrangement of T^1.
inline std::vector<Rat> arrangement_samples(std::vector<Rat> endpoints) {
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    std::vector<Rat> out = endpoints;
    const std::size_t k = endpoints.size();
    for (std::size_t i = 0; i < k; ++i) {
        Rat next = (i + 1 < k) ? endpoints[i + 1] : endpoints[0] + 1;
        out.push_back(wrap1((endpoints[i] + next) / 2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<double> arrangement_samples_f(std::vector<double> endpoints, double tol) {
    std::sort(endpoints.begin(), endpoints.end());
    std::vector<double> vals;
    for (double v : endpoints)
        if (vals.empty() || v - vals.back() > tol) vals.push_back(v);
    if (vals.size() > 1 && (vals.back() - vals.front()) > 1.0 - tol) vals.pop_back();
    std::vector<double> out = vals;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double next = (i + 1 < vals.size()) ? vals[i + 1] : vals[0] + 1.0;
        out.push_back(wrap1f(0.5 * (vals[i] + next)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace illumcover::detail

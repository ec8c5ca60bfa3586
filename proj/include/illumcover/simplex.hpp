#pragma once

#include "illumcover/common.hpp"

#include <vector>

namespace illumcover {

struct SimplexResult {
    Rat value;
    std::vector<Rat> x;      // structural variables
    std::vector<Rat> duals;  // shadow prices of the <= constraints
    long long pivots = 0;
};

// Dense exact simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0
// (slack basis feasible). Bland's rule throughout, so termination is
// guaranteed and runs are reproducible.
SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                          const std::vector<Rat>& c, long long pivot_limit = 2000000);

}  // namespace illumcover

#include "illumcover/simplex.hpp"

#include <sstream>

namespace illumcover {

SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                          const std::vector<Rat>& c, long long pivot_limit) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw SolverFailure("simplex: ragged constraint matrix");
    if (b.size() != m) throw SolverFailure("simplex: rhs size mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw SolverFailure("simplex: negative rhs, slack basis infeasible");

    // tableau rows: m constraints over n structural + m slack columns + rhs
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = b[i];
    }
    std::vector<Rat> obj(cols, Rat(0));  // reduced costs; obj[cols-1] = -value
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    long long pivots = 0;
    while (true) {
        // Bland: entering column = lowest index with positive reduced cost
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols - 1) break;

        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw SolverFailure("simplex: unbounded objective");

        if (++pivots > pivot_limit) {
            std::ostringstream os;
            os << "simplex: pivot limit exceeded after " << pivots - 1 << " iterations, entering "
               << enter << ", basis value " << obj[cols - 1];
            throw SolverFailure(os.str());
        }

        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    SimplexResult res;
    res.pivots = pivots;
    res.value = -obj[cols - 1];
    res.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][cols - 1];
    res.duals.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) res.duals[i] = -obj[n + i];
    return res;
}

}  // namespace illumcover

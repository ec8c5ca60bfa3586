#include "illumcover/fractional.hpp"

#include "illumcover/simplex.hpp"

#include <cmath>

namespace illumcover {

namespace {

Rat pow_rat(const Rat& base, int e) {
    Rat out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// offsets o/k with (o + 1/2)/k inside (0, eps): the covering pattern at the
// cell midpoints of the grid
std::vector<int> midpoint_offsets(int k, const Rat& eps) {
    std::vector<int> offs;
    for (int o = 0; o < k; ++o)
        if (Rat(2 * o + 1, 2 * k) < eps) offs.push_back(o);
    return offs;
}

}  // namespace

Rat GridMeasure::total_mass() const {
    Rat t(0);
    for (const auto& w : weights) t += w;
    return t;
}

Rat fractional_covering_number(int n, const Rat& eps) {
    if (n < 1) throw DomainError("fractional_covering_number: n must be >= 1");
    if (!(eps > 0 && eps < 1)) throw DomainError("fractional_covering_number: eps must lie in (0,1)");
    return pow_rat(1 / eps, n);
}

double fractional_covering_number_f(int n, double eps) {
    if (n < 1 || !(eps > 0 && eps < 1))
        throw DomainError("fractional_covering_number_f: bad arguments");
    return std::pow(1.0 / eps, n);
}

UniformMeasureReport uniform_measure_certificate(int n, const Rat& eps, int samples,
                                                 std::uint64_t seed) {
    UniformMeasureReport rep;
    rep.total_mass = fractional_covering_number(n, eps);

    // density eps^-n over volume eps^n
    Rat density = rep.total_mass;  // mass / vol(T^n) = mass
    rep.analytic_ok = density * pow_rat(eps, n) == 1;

    SplitMix64 rng(seed);
    rep.samples_ok = true;
    for (int s = 0; s < samples; ++s) {
        Rat volume(1);
        for (int j = 0; j < n; ++j) {
            long long den = 2 + static_cast<long long>(rng.below(997));
            Rat x(static_cast<long long>(rng.below(den)), den);
            // window (x - eps, x) mod 1, measured piece by piece in [0,1)
            Rat lo = UnitRat::wrap(x - eps).value;
            Rat hi = UnitRat::wrap(x).value;
            Rat len = hi >= lo ? Rat(hi - lo) : Rat(1 - lo + hi);
            volume *= len;
        }
        if (volume * density != 1) rep.samples_ok = false;
        ++rep.samples_checked;
    }
    return rep;
}

bool grid_measure_feasible(const GridMeasure& mu, const Rat& eps) {
    const int k = mu.k;
    const int n = mu.n;
    auto offs = midpoint_offsets(k, eps);
    long long cells = 1;
    for (int j = 0; j < n; ++j) cells *= k;
    std::vector<int> idx(n, 0);
    for (long long c = 0; c < cells; ++c) {
        long long rem = c;
        for (int j = n - 1; j >= 0; --j) {
            idx[j] = static_cast<int>(rem % k);
            rem /= k;
        }
        // mass of the window at the cell midpoint (idx + 1/2)/k
        Rat mass(0);
        std::vector<int> v(n, 0);
        long long combos = 1;
        for (int j = 0; j < n; ++j) combos *= static_cast<long long>(offs.size());
        for (long long u = 0; u < combos; ++u) {
            long long rr = u;
            long long flat = 0;
            for (int j = n - 1; j >= 0; --j) {
                int o = offs[rr % offs.size()];
                rr /= offs.size();
                int vi = ((idx[j] - o) % k + k) % k;
                v[j] = vi;
            }
            for (int j = 0; j < n; ++j) flat = flat * k + v[j];
            mass += mu.weights[flat];
        }
        if (mass < 1) return false;
    }
    return true;
}

LpReport lp_fractional_cover(int n, const Rat& eps, int k) {
    if (n < 1) throw DomainError("lp_fractional_cover: n must be >= 1");
    if (!(eps > 0 && eps < 1)) throw DomainError("lp_fractional_cover: eps must lie in (0,1)");
    if (k < 1) throw DomainError("lp_fractional_cover: k must be >= 1");
    double total = std::pow(double(k), n);
    if (total > 1e6) throw DomainError("lp_fractional_cover: k^n exceeds the 10^6 guard");

    auto offs = midpoint_offsets(k, eps);
    if (offs.empty()) throw Infeasible("lp_fractional_cover: no grid point covers a cell midpoint");

    const long long cells = static_cast<long long>(total + 0.5);

    // Solve the dual  max sum y_x  s.t. for every grid point v:
    // sum over midpoints x covered by v of y_x <= 1. Slack basis feasible.
    long long combos = 1;
    for (int j = 0; j < n; ++j) combos *= static_cast<long long>(offs.size());

    std::vector<std::vector<Rat>> A(cells, std::vector<Rat>(cells, Rat(0)));
    std::vector<int> base(n, 0);
    for (long long v = 0; v < cells; ++v) {
        long long rem = v;
        for (int j = n - 1; j >= 0; --j) {
            base[j] = static_cast<int>(rem % k);
            rem /= k;
        }
        for (long long u = 0; u < combos; ++u) {
            long long rr = u;
            long long flat = 0;
            std::vector<int> xi(n, 0);
            for (int j = n - 1; j >= 0; --j) {
                int o = offs[rr % offs.size()];
                rr /= offs.size();
                xi[j] = (base[j] + o) % k;
            }
            for (int j = 0; j < n; ++j) flat = flat * k + xi[j];
            A[v][flat] = 1;
        }
    }
    std::vector<Rat> b(cells, Rat(1)), c(cells, Rat(1));
    SimplexResult sol = simplex_max(A, b, c);

    LpReport rep;
    rep.pivots = sol.pivots;
    rep.dual = sol.value;
    Rat keps = eps * k;
    rep.grid_aligned = boost::multiprecision::denominator(keps) == 1;

    rep.measure.n = n;
    rep.measure.k = k;
    rep.measure.weights = sol.duals;  // shadow prices = covering weights
    rep.primal = rep.measure.total_mass();
    if (!grid_measure_feasible(rep.measure, eps))
        throw SolverFailure("lp_fractional_cover: recovered primal weights infeasible after " +
                            std::to_string(sol.pivots) + " pivots");
    rep.gap = rep.primal - rep.dual;
    if (rep.gap < 0)
        throw SolverFailure("lp_fractional_cover: negative duality gap (weak duality violated)");
    return rep;
}

}  // namespace illumcover

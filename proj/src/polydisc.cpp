#include "illumcover/polydisc.hpp"

#include "illumcover/mec.hpp"

#include <cmath>

namespace illumcover {

namespace {
constexpr double kPi = 3.14159265358979323846;

// floor with a guard band: nullopt when the argument sits within margin of an
// integer (the floor of the underlying exact value is then undecidable).
std::optional<long long> guarded_floor(double x, double margin) {
    double r = std::nearbyint(x);
    if (std::fabs(x - r) <= margin) return std::nullopt;
    return static_cast<long long>(std::floor(x));
}
}  // namespace

bool TorusCube::contains(const TorusPoint& x) const { return cube_contains(base, side, x); }

TorusCube illuminated_cube(const ExtremalDirection& v) {
    TorusCube cube;
    cube.side = Rat(1, 2);
    cube.base = torus_add(v.phases, std::vector<Rat>(v.dim(), Rat(1, 4)));
    return cube;
}

bool illuminates(const ExtremalDirection& v, const ExtremalDirection& x) {
    if (v.dim() != x.dim()) throw DimensionMismatch("illuminates: dimension mismatch");
    return illuminated_cube(v).contains(x.phases);
}

std::vector<ExtremalDirection> direction_set_from_cover(const CubeCover& cover) {
    if (cover.mode != Mode::Exact)
        throw DomainError("direction_set_from_cover: exact cover required");
    if (cover.side != Rat(1, 2))
        throw SideMismatch("direction_set_from_cover: cover side must be 1/2");
    std::vector<ExtremalDirection> out;
    out.reserve(cover.bases.size());
    const std::vector<Rat> shift(cover.dim, Rat(-1, 4));
    for (const auto& b : cover.bases) out.push_back({torus_add(b, shift)});
    return out;
}

ExtremalDirection extremal_from_vector(const std::vector<Cx>& v, long long den) {
    if (v.empty()) throw DomainError("extremal_from_vector: empty direction");
    if (den < 8) throw DomainError("extremal_from_vector: denominator too coarse");
    std::vector<UnitRat> phases(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (std::abs(v[j]) < 1e-300)
            throw DomainError("extremal_from_vector: zero coordinate illuminates nothing");
        double theta = std::atan2(v[j].imag(), v[j].real()) / (2.0 * kPi);
        long long num = std::llround(theta * double(den)) % den;
        phases[j] = UnitRat::wrap(Rat(num, den));
    }
    return {TorusPoint(std::move(phases))};
}

Int illumination_number_polydisc(int n) {
    if (n < 1) throw DomainError("illumination_number_polydisc: n must be >= 1");
    return boost::multiprecision::pow(Int(2), n + 1) - 1;
}

Int fractional_number_polydisc(int n) {
    if (n < 1) throw DomainError("fractional_number_polydisc: n must be >= 1");
    return boost::multiprecision::pow(Int(2), n);
}

double light_source_side(double r) {
    if (!(r > 1.0)) throw DomainError("light_source_side: radius must exceed 1");
    return std::acos(1.0 / r) / kPi;
}

std::optional<int> unit_fraction_side(double r) {
    if (!(r > 1.0)) return std::nullopt;
    for (int m = 3; m <= 64; ++m) {
        double rm = 1.0 / std::cos(kPi / m);
        if (std::fabs(r - rm) <= 1e-12 * std::max(1.0, rm)) return m;
    }
    return std::nullopt;
}

Ternary light_source_illuminates(const LightSource& s, const ExtremalDirection& x, double margin) {
    if (!(s.radius > 1.0)) throw DomainError("light_source_illuminates: radius must exceed 1");
    if (s.phases.dim() != x.dim())
        throw DimensionMismatch("light_source_illuminates: dimension mismatch");
    const double threshold = light_source_side(s.radius) / 2.0;
    bool border = false;
    for (int j = 0; j < x.dim(); ++j) {
        double d =
            symmetric_distance(s.phases.coords[j], x.phases.coords[j]).convert_to<double>();
        if (std::fabs(d - threshold) <= margin) {
            border = true;
            continue;
        }
        if (d > threshold) return Ternary::False;
    }
    return border ? Ternary::Inconclusive : Ternary::True;
}

LightSourceCount light_source_number(int n, double r, int search_grid, long long node_budget) {
    if (n < 1) throw DomainError("light_source_number: n must be >= 1");
    if (!(r > 1.0)) throw DomainError("light_source_number: radius must exceed 1");
    LightSourceCount out;
    out.eps = light_source_side(r);

    if (auto m = unit_fraction_side(r)) {
        out.exact = lower_bound_unit_fraction(n, *m);
        out.lower = *out.exact;
        return out;
    }

    out.lower = lower_bound_recurrence_f(n, out.eps);
    if (n == 1) {
        // N(T^1,(0,eps)) = floor(1/eps) + 1: arcs at spacing 1/(floor+1)
        if (auto f = guarded_floor(1.0 / out.eps, 1e-9)) out.exact = Int(*f + 1);
    } else if (n == 2) {
        // floor((1/eps)(floor(1/eps)+1)) + 1 with guard bands on both floors
        double inv = 1.0 / out.eps;
        if (auto f1 = guarded_floor(inv, 1e-9)) {
            if (auto f2 = guarded_floor(inv * double(*f1 + 1), 1e-9)) out.exact = Int(*f2 + 1);
        }
    } else if (n == 3) {
        if (auto v = exact_value_3d_f(out.eps)) out.exact = *v;
    }
    if (out.exact) {
        out.lower = *out.exact;
        return out;
    }
    if (search_grid > 0) {
        try {
            SearchResult res = search_minimal_cover_f(n, out.eps, search_grid, kDefaultMargin,
                                                      node_budget);
            out.upper = Int(res.cover.size());
        } catch (const BudgetExceeded&) {
            // no certified upper bound within budget
        }
    }
    return out;
}

bool illuminated_by_inner_product(const ExtremalDirection& v, const ExtremalDirection& x) {
    if (v.dim() != x.dim()) throw DimensionMismatch("illuminated_by_inner_product: dims differ");
    // <x_j, v_j> = cos(2 pi (beta_j - alpha_j)); its sign is decided exactly
    // from the rational phase difference: cos(2 pi d) < 0 iff d in (1/4, 3/4)
    for (int j = 0; j < v.dim(); ++j) {
        Rat d = oriented_distance(v.phases.coords[j], x.phases.coords[j]).value;
        if (!(d > Rat(1, 4) && d < Rat(3, 4))) return false;
    }
    return true;
}

bool illuminated_by_ray(const ExtremalDirection& v, const ExtremalDirection& x) {
    if (v.dim() != x.dim()) throw DimensionMismatch("illuminated_by_ray: dims differ");
    const int n = v.dim();
    std::vector<Cx> xv(n), vv(n);
    for (int j = 0; j < n; ++j) {
        double a = 2.0 * kPi * x.phases.coords[j].value.convert_to<double>();
        double b = 2.0 * kPi * v.phases.coords[j].value.convert_to<double>();
        xv[j] = Cx(std::cos(a), std::sin(a));
        vv[j] = Cx(std::cos(b), std::sin(b));
    }
    for (int k = 1; k <= 20; ++k) {
        double t = std::ldexp(1.0, -k);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = std::abs(xv[j] + t * vv[j]) < 1.0;
        if (ok) return true;
    }
    return false;
}

}  // namespace illumcover

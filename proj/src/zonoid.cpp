#include "illumcover/zonoid.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace illumcover {

namespace {

constexpr double kPi = 3.14159265358979323846;

double halton(std::uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

// Simpson with an even number of subintervals.
template <typename F>
double simpson(F f, double a, double b, int subintervals) {
    if (subintervals % 2) ++subintervals;
    const double h = (b - a) / subintervals;
    double s = f(a) + f(b);
    for (int i = 1; i < subintervals; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// integral over [0, 2pi] of |A cos t - B sin t|, Simpson on the smooth
// segments split at the integrand's zeros, about q nodes in total.
double integral_abs_response(double A, double B, int q) {
    if (A == 0.0 && B == 0.0) return 0.0;
    auto f = [&](double t) { return std::fabs(A * std::cos(t) - B * std::sin(t)); };
    double t0 = std::atan2(A, B);  // A cos t0 - B sin t0 = 0
    t0 = std::fmod(t0, kPi);
    if (t0 < 0) t0 += kPi;
    std::vector<double> cuts = {0.0, 2.0 * kPi};
    for (double c : {t0, t0 + kPi})
        if (c > 1e-15 && c < 2.0 * kPi - 1e-15) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double len = cuts[i + 1] - cuts[i];
        if (len < 1e-15) continue;
        int sub = std::max(2, int(q * len / (2.0 * kPi)) & ~1);
        total += simpson(f, cuts[i], cuts[i + 1], sub);
    }
    return total;
}

}  // namespace

Cx complex_inner(const CxVec& a, const CxVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("complex_inner: lengths differ");
    Cx s(0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

double real_inner(const CxVec& a, const CxVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("real_inner: lengths differ");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

DiscreteZonoid make_discrete_zonoid(int n, std::vector<CxVec> atoms, std::vector<double> weights) {
    if (n < 1) throw DomainError("make_discrete_zonoid: n must be >= 1");
    if (atoms.size() != weights.size() || atoms.empty())
        throw DomainError("make_discrete_zonoid: atoms/weights mismatch");
    for (auto& a : atoms) {
        if (static_cast<int>(a.size()) != n)
            throw DimensionMismatch("make_discrete_zonoid: atom has wrong length");
        double norm = std::sqrt(std::abs(complex_inner(a, a)));
        if (norm < 1e-12) throw DomainError("make_discrete_zonoid: zero atom");
        for (auto& z : a) z /= norm;
    }
    for (double w : weights)
        if (!(w > 0)) throw DomainError("make_discrete_zonoid: weights must be positive");
    DiscreteZonoid z;
    z.n = n;
    z.atoms = std::move(atoms);
    z.weights = std::move(weights);
    return z;
}

double support_function(const DiscreteZonoid& z, const CxVec& theta) {
    if (static_cast<int>(theta.size()) != z.n)
        throw DimensionMismatch("support_function: theta has wrong length");
    double h = 0;
    for (std::size_t k = 0; k < z.atoms.size(); ++k)
        h += z.weights[k] * std::abs(complex_inner(z.atoms[k], theta));
    return h;
}

IdentityReport complex_real_identity_check(const CxVec& x, const CxVec& y, int q) {
    if (q < 64) throw DomainError("complex_real_identity_check: q must be >= 64");
    IdentityReport rep;
    rep.lhs = std::abs(complex_inner(x, y));
    // <e^{it}x, y>_R = A cos t - B sin t computed from real coordinates
    CxVec ix(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ix[i] = Cx(0, 1) * x[i];
    const double A = real_inner(x, y);
    const double B = -real_inner(ix, y);
    rep.rhs = 0.25 * integral_abs_response(A, B, q);
    rep.error = std::fabs(rep.lhs - rep.rhs);
    return rep;
}

DiscreteZonoid rotation_average(const DiscreteZonoid& real_zonoid) {
    DiscreteZonoid out = real_zonoid;
    for (auto& w : out.weights) w *= 4.0 / (2.0 * kPi);
    return out;
}

double averaged_real_support(const DiscreteZonoid& real_zonoid, const CxVec& theta, int q) {
    if (static_cast<int>(theta.size()) != real_zonoid.n)
        throw DimensionMismatch("averaged_real_support: theta has wrong length");
    double total = 0;
    for (std::size_t k = 0; k < real_zonoid.atoms.size(); ++k) {
        // <x_k, e^{it} theta>_R = A cos t + B sin t
        Cx c = complex_inner(real_zonoid.atoms[k], theta);
        total += real_zonoid.weights[k] * integral_abs_response(c.real(), -c.imag(), q);
    }
    return total / (2.0 * kPi);
}

std::vector<CxVec> sphere_sample(int n, int count, std::uint64_t skip) {
    std::vector<CxVec> out;
    out.reserve(count);
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int i = 0; i < count; ++i) {
        std::uint64_t idx = skip + i + 1;
        CxVec v(n);
        double norm = 0;
        for (int d = 0; d < n; ++d) {
            double u1 = halton(idx, primes[(2 * d) % 12]);
            double u2 = halton(idx, primes[(2 * d + 1) % 12]);
            u1 = std::max(u1, 1e-12);
            double r = std::sqrt(-2.0 * std::log(u1));
            v[d] = Cx(r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2));
            norm += std::norm(v[d]);
        }
        norm = std::sqrt(norm);
        if (norm < 1e-9) {
            v.assign(n, Cx(0, 0));
            v[0] = Cx(1, 0);
        } else {
            for (auto& z : v) z /= norm;
        }
        out.push_back(std::move(v));
    }
    return out;
}

SummandResult summand_extraction(const DiscreteZonoid& z, const std::vector<Cluster>& clusters,
                                 double delta, int theta_samples) {
    const int n = z.n;
    if (static_cast<int>(clusters.size()) != n + 1)
        throw DomainError("summand_extraction: need exactly n+1 clusters");
    if (!(delta > 0)) throw DomainError("summand_extraction: delta must be positive");

    std::set<int> seen;
    for (const auto& cl : clusters) {
        if (cl.members.empty()) throw DomainError("summand_extraction: empty cluster");
        bool rep_in = false;
        for (int i : cl.members) {
            if (i < 0 || i >= static_cast<int>(z.atoms.size()))
                throw DomainError("summand_extraction: atom index out of range");
            if (!seen.insert(i).second)
                throw DomainError("summand_extraction: clusters must be disjoint");
            rep_in |= i == cl.representative;
        }
        if (!rep_in) throw DomainError("summand_extraction: representative not in its cluster");
        // the proof needs neighborhoods of diameter below delta/(n+1)
        const double bound = delta / (n + 1);
        for (std::size_t a = 0; a < cl.members.size(); ++a) {
            for (std::size_t b = a + 1; b < cl.members.size(); ++b) {
                CxVec diff = z.atoms[cl.members[a]];
                for (int c = 0; c < n; ++c) diff[c] -= z.atoms[cl.members[b]][c];
                double d = std::sqrt(std::abs(complex_inner(diff, diff)));
                if (d >= bound)
                    throw ClusterTooWide("summand_extraction: cluster diameter " +
                                         std::to_string(d) + " >= " + std::to_string(bound));
            }
        }
    }

    SummandResult res;
    res.zonotope.field = Field::Complex;
    res.zonotope.n = n;
    for (const auto& cl : clusters) res.zonotope.vecs.push_back(z.atoms[cl.representative]);

    std::vector<double> cluster_mass(clusters.size(), 0.0);
    for (std::size_t j = 0; j < clusters.size(); ++j)
        for (int i : clusters[j].members) cluster_mass[j] += z.weights[i];
    res.m = *std::min_element(cluster_mass.begin(), cluster_mass.end());

    // Z1/m: weights w_i / mu(U_j); the summand property mu_1 <= mu holds
    // atomwise since m <= mu(U_j).
    res.summand_scaled.n = n;
    res.summand_ok = true;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
        for (int i : clusters[j].members) {
            res.summand_scaled.atoms.push_back(z.atoms[i]);
            res.summand_scaled.weights.push_back(z.weights[i] / cluster_mass[j]);
            if (res.m / cluster_mass[j] * z.weights[i] > z.weights[i] * (1 + 1e-12))
                res.summand_ok = false;
        }
    }

    auto thetas = sphere_sample(n, theta_samples);
    double worst = 0.0;
    for (const auto& theta : thetas) {
        double diff = 0.0;
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            double avg = 0.0;
            for (int i : clusters[j].members)
                avg += z.weights[i] / cluster_mass[j] * std::abs(complex_inner(z.atoms[i], theta));
            diff += avg - std::abs(complex_inner(z.atoms[clusters[j].representative], theta));
        }
        worst = std::max(worst, std::fabs(diff));
    }
    res.hausdorff_estimate = worst;
    res.within_delta = worst < delta;
    return res;
}

}  // namespace illumcover

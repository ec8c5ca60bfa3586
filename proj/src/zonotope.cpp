#include "illumcover/zonotope.hpp"

#include "illumcover/covering.hpp"
#include "illumcover/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace illumcover {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(const CxVec& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

Cx inner(const CxVec& a, const CxVec& b) {
    Cx s(0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

// Cauchy-Schwarz equality test; over R this is the same as real parallelism
// because the inputs carry zero imaginary parts.
bool parallel(const CxVec& a, const CxVec& b) {
    double na = norm2(a), nb = norm2(b);
    return std::norm(inner(a, b)) >= (1.0 - 1e-12) * na * nb;
}

CxVec scaled(const CxVec& v, const Cx& c) {
    CxVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

// Solves sum_j eta_j basis_j = target by Gaussian elimination with partial
// pivoting; basis is square and well-conditioned here (it passed rank
// selection).
CxVec solve_basis(const std::vector<CxVec>& basis, const CxVec& target) {
    const int n = static_cast<int>(target.size());
    std::vector<CxVec> m(n, CxVec(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = basis[c][r];
        m[r][n] = target[r];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        if (std::abs(m[col][col]) < 1e-13) throw RankDeficient("solve_basis: singular system");
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Cx f = m[r][col] / m[col][col];
            if (f == Cx(0, 0)) continue;
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    CxVec eta(n);
    for (int r = 0; r < n; ++r) eta[r] = m[r][n] / m[r][r];
    return eta;
}

std::vector<int> greedy_basis(const std::vector<CxVec>& vecs, int n) {
    std::vector<int> picked;
    std::vector<CxVec> ortho;
    for (int i = 0; i < static_cast<int>(vecs.size()) && static_cast<int>(picked.size()) < n; ++i) {
        CxVec res = vecs[i];
        for (const auto& q : ortho) {
            Cx proj = inner(res, q);
            for (std::size_t c = 0; c < res.size(); ++c) res[c] -= proj * q[c];
        }
        double rn = std::sqrt(norm2(res));
        if (rn > 1e-9 * std::sqrt(norm2(vecs[i]))) {
            picked.push_back(i);
            for (auto& z : res) z /= rn;
            ortho.push_back(res);
        }
    }
    return picked;
}

void require_canonical(const CanonicalZonotope& K) {
    const int n = K.n;
    if (n < 2) throw NotCanonical("canonical zonotope needs n >= 2");
    if (static_cast<int>(K.gens.size()) != n + 1 || static_cast<int>(K.lambda.size()) != n + 1)
        throw NotCanonical("canonical zonotope needs n+1 generators and dependence flags");
    if (!(K.lambda[n - 2] == 1 && K.lambda[n - 1] == 1 && K.lambda[n] == 1))
        throw NotCanonical("canonical dependence must end in three ones");
}

std::vector<Rat> real_direction_coeffs(int n, int sigma_bits, int v_index) {
    std::vector<Rat> c(n + 1, Rat(0));
    for (int j = 0; j < n - 2; ++j) c[j] = (sigma_bits >> j) & 1 ? Rat(-1) : Rat(1);
    const Rat third(1, 3);
    if (v_index == 0) {
        c[n - 2] += third;
        c[n - 1] -= third;
    } else if (v_index == 1) {
        c[n - 1] += third;
        c[n] -= third;
    } else {
        c[n] += third;
        c[n - 2] -= third;
    }
    return c;
}

CxVec ambient_of(const CanonicalZonotope& K, const CxVec& coeffs) {
    CxVec out(K.n, Cx(0, 0));
    for (int j = 0; j <= K.n; ++j)
        for (int c = 0; c < K.n; ++c) out[c] += coeffs[j] * K.gens[j][c];
    return out;
}

}  // namespace

Generators generators_of(const CanonicalZonotope& K) {
    Generators g;
    g.field = K.field;
    g.n = K.n;
    g.vecs = K.gens;
    return g;
}

CanonicalZonotope reduce_to_canonical(const Generators& g) {
    const int n = g.n;
    if (n < 2) throw DomainError("reduce_to_canonical: n must be >= 2");
    for (const auto& v : g.vecs)
        if (static_cast<int>(v.size()) != n)
            throw DimensionMismatch("reduce_to_canonical: generator has wrong length");

    // drop zero generators, then merge parallel pairs (disc/segment radii add)
    std::vector<CxVec> vecs;
    for (const auto& v : g.vecs)
        if (norm2(v) > 1e-24) vecs.push_back(v);
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < vecs.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < vecs.size() && !merged; ++j) {
                if (!parallel(vecs[i], vecs[j])) continue;
                double f = 1.0 + std::sqrt(norm2(vecs[j]) / norm2(vecs[i]));
                vecs[i] = scaled(vecs[i], Cx(f, 0));
                vecs.erase(vecs.begin() + j);
                merged = true;
            }
        }
    }

    std::vector<int> basis_idx = greedy_basis(vecs, n);
    if (static_cast<int>(basis_idx.size()) < n)
        throw RankDeficient("reduce_to_canonical: generators do not span");
    if (static_cast<int>(vecs.size()) == n)
        throw IsCubeOrPolydisc("reduce_to_canonical: a cube/polydisc image after merging");

    std::vector<CxVec> basis;
    for (int i : basis_idx) basis.push_back(vecs[i]);

    // pick the extra generator whose dependence has the most nonzero entries
    int best_extra = -1;
    int best_nonzeros = -1;
    CxVec best_eta;
    double scale = 0;
    for (const auto& v : vecs) scale = std::max(scale, std::sqrt(norm2(v)));
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i) {
        if (std::find(basis_idx.begin(), basis_idx.end(), i) != basis_idx.end()) continue;
        CxVec eta = solve_basis(basis, vecs[i]);
        int nz = 0;
        for (int j = 0; j < n; ++j)
            if (std::abs(eta[j]) * std::sqrt(norm2(basis[j])) > 1e-9 * scale) ++nz;
        if (nz > best_nonzeros) {
            best_nonzeros = nz;
            best_extra = i;
            best_eta = eta;
        }
    }
    if (best_nonzeros < 2)
        throw RankDeficient("reduce_to_canonical: no usable dependence found");

    // slot order: zero/extra-nonzero basis vectors first, the last two
    // nonzero ones in slots n-1 and n, the extra generator last
    std::vector<int> nonzero_pos;
    for (int j = 0; j < n; ++j)
        if (std::abs(best_eta[j]) * std::sqrt(norm2(basis[j])) > 1e-9 * scale)
            nonzero_pos.push_back(j);
    int d1 = nonzero_pos[nonzero_pos.size() - 2];
    int d2 = nonzero_pos[nonzero_pos.size() - 1];

    std::vector<int> slot_of_basis;
    for (int j = 0; j < n; ++j)
        if (j != d1 && j != d2) slot_of_basis.push_back(j);
    slot_of_basis.push_back(d1);
    slot_of_basis.push_back(d2);

    // dependence over the permuted generators; coefficient -1 on the extra
    std::vector<Cx> dep(n + 1);
    std::vector<CxVec> arranged(n + 1);
    for (int s = 0; s < n; ++s) {
        int j = slot_of_basis[s];
        arranged[s] = basis[j];
        dep[s] = std::abs(best_eta[j]) * std::sqrt(norm2(basis[j])) > 1e-9 * scale
                     ? best_eta[j]
                     : Cx(0, 0);
    }
    arranged[n] = vecs[best_extra];
    dep[n] = Cx(-1, 0);

    Cx lead(0, 0);
    for (int s = 0; s <= n; ++s)
        if (dep[s] != Cx(0, 0)) {
            lead = dep[s];
            break;
        }
    for (auto& d : dep) d /= lead;

    CanonicalZonotope K;
    K.field = g.field;
    K.n = n;
    K.gens.resize(n + 1);
    K.lambda.assign(n + 1, 0);
    for (int s = 0; s <= n; ++s) {
        if (dep[s] != Cx(0, 0)) {
            if (g.field == Field::Real) dep[s] = Cx(dep[s].real(), 0.0);
            K.gens[s] = scaled(arranged[s], dep[s]);
            K.lambda[s] = 1;
        } else {
            K.gens[s] = arranged[s];
        }
    }

    CxVec residual(n, Cx(0, 0));
    double gen_scale = 0;
    for (int s = 0; s <= n; ++s) {
        gen_scale = std::max(gen_scale, std::sqrt(norm2(K.gens[s])));
        if (K.lambda[s])
            for (int c = 0; c < n; ++c) residual[c] += K.gens[s][c];
    }
    K.dependence_residual = std::sqrt(norm2(residual)) / gen_scale;
    if (K.dependence_residual > 1e-6)
        throw RankDeficient("reduce_to_canonical: dependence residual too large");
    require_canonical(K);
    return K;
}

RationalWitness real_witness_for(const std::vector<int>& lambda, const std::vector<int>& signs) {
    const int n = static_cast<int>(lambda.size()) - 1;
    if (static_cast<int>(signs.size()) != n + 1)
        throw DimensionMismatch("real_witness_for: sign vector has wrong length");
    for (int s : signs)
        if (s != 1 && s != -1) throw DomainError("real_witness_for: signs must be +-1");

    const int a = signs[n - 2], b = signs[n - 1], c = signs[n];
    int sigma_bits = 0;
    for (int j = 0; j < n - 2; ++j)
        if (signs[j] == 1) sigma_bits |= 1 << j;  // f_j = -x_j

    RationalWitness w;
    w.t = 1;
    int v_index;
    Rat alpha;
    if (a == b && b == c) {
        alpha = a;
        v_index = 0;  // arbitrary per the construction
        w.delta = -alpha / 2;
    } else {
        int i = (a != b && a != c) ? n - 2 : (b != a && b != c ? n - 1 : n);
        alpha = signs[i];
        if (i == n - 1)
            v_index = 0;  // (a_{n-1} - a_n)/3 up to the sign alpha
        else if (i == n)
            v_index = 1;
        else
            v_index = 2;
        // V holds oriented differences; for alpha = -1 the matched element is
        // the next one around the 3-cycle
        if (alpha == -1) v_index = (v_index + 1) % 3;
        w.delta = alpha / 6;
    }
    w.dir_index = sigma_bits * 3 + v_index;

    std::vector<Rat> dir = real_direction_coeffs(n, sigma_bits, v_index);
    w.coeffs.resize(n + 1);
    w.max_abs = 0;
    for (int j = 0; j <= n; ++j) {
        w.coeffs[j] = Rat(signs[j]) + dir[j] + w.delta * lambda[j];
        Rat mod = w.coeffs[j] < 0 ? Rat(-w.coeffs[j]) : w.coeffs[j];
        if (mod >= 1) throw DomainError("real_witness_for: witness escaped the open cube");
        if (mod > w.max_abs) w.max_abs = mod;
    }
    return w;
}

DirectionSet real_illuminating_set(const CanonicalZonotope& K) {
    require_canonical(K);
    if (K.field != Field::Real) throw NotCanonical("real_illuminating_set: real form required");
    const int n = K.n;
    DirectionSet out;
    out.n = n;
    for (int bits = 0; bits < (1 << (n - 2)); ++bits) {
        for (int v = 0; v < 3; ++v) {
            Direction d;
            std::vector<Rat> coeffs = real_direction_coeffs(n, bits, v);
            d.coeffs.resize(n + 1);
            for (int j = 0; j <= n; ++j) d.coeffs[j] = Cx(coeffs[j].convert_to<double>(), 0.0);
            d.ambient = ambient_of(K, d.coeffs);
            out.dirs.push_back(std::move(d));
        }
    }
    return out;
}

DirectionSet complex_illuminating_set(const CanonicalZonotope& K) {
    require_canonical(K);
    if (K.field != Field::Complex)
        throw NotCanonical("complex_illuminating_set: complex form required");
    const int n = K.n;
    auto subpolydisc = direction_set_from_cover(construct_cover(n - 1, 2));

    DirectionSet out;
    out.n = n;
    // V1 on generators a_1..a_{n-1}
    for (const auto& dir : subpolydisc) {
        Direction d;
        d.coeffs.assign(n + 1, Cx(0, 0));
        for (int j = 0; j < n - 1; ++j) {
            double ph = 2.0 * kPi * dir.phases.coords[j].value.convert_to<double>();
            d.coeffs[j] = Cx(std::cos(ph), std::sin(ph));
        }
        d.ambient = ambient_of(K, d.coeffs);
        out.dirs.push_back(std::move(d));
    }
    // V3: directions on a_1..a_{n-2},a_n, shifted by -v_n on a_{n+1}
    for (const auto& dir : subpolydisc) {
        Direction d;
        d.coeffs.assign(n + 1, Cx(0, 0));
        for (int j = 0; j < n - 2; ++j) {
            double ph = 2.0 * kPi * dir.phases.coords[j].value.convert_to<double>();
            d.coeffs[j] = Cx(std::cos(ph), std::sin(ph));
        }
        double ph = 2.0 * kPi * dir.phases.coords[n - 2].value.convert_to<double>();
        Cx vn(std::cos(ph), std::sin(ph));
        d.coeffs[n - 1] = vn;
        d.coeffs[n] = -vn;
        d.ambient = ambient_of(K, d.coeffs);
        out.dirs.push_back(std::move(d));
    }
    return out;
}

std::optional<IlluminationWitness> illuminates_canonical(const CxVec& x, const CxVec& v,
                                                         const std::vector<int>& lambda,
                                                         int t_depth, double margin) {
    const std::size_t k = lambda.size();
    if (x.size() != k || v.size() != k)
        throw DimensionMismatch("illuminates_canonical: coefficient lengths differ");

    std::vector<Cx> centers;
    centers.reserve(k);
    for (int step = 0; step <= t_depth; ++step) {
        const double t = std::ldexp(1.0, -step);
        bool ok = true;
        centers.clear();
        for (std::size_t j = 0; j < k && ok; ++j) {
            Cx shifted = x[j] + t * v[j];
            if (lambda[j])
                centers.push_back(-shifted);
            else if (std::abs(shifted) >= 1.0 - margin)
                ok = false;
        }
        if (!ok) continue;

        Cx delta(0, 0);
        if (!centers.empty()) {
            Circle mec = min_enclosing_circle(centers);
            if (mec.radius >= 1.0 - margin) continue;
            delta = mec.center;
        }
        IlluminationWitness w;
        w.t = t;
        w.delta = delta;
        w.coeffs.resize(k);
        w.max_mod = 0.0;
        bool valid = true;
        for (std::size_t j = 0; j < k; ++j) {
            w.coeffs[j] = x[j] + t * v[j] + delta * double(lambda[j]);
            w.max_mod = std::max(w.max_mod, std::abs(w.coeffs[j]));
            if (std::abs(w.coeffs[j]) >= 1.0 - margin) valid = false;
        }
        if (valid) return w;
    }
    return std::nullopt;
}

IlluminationReport verify_illumination(const CanonicalZonotope& K, const DirectionSet& dirs, int q,
                                       int threads, int t_depth, double margin) {
    require_canonical(K);
    if (q < 8) throw DomainError("verify_illumination: phase resolution must be >= 8");
    const int n = K.n;
    const int arity = K.field == Field::Complex ? q : 2;

    std::vector<Cx> roots(arity);
    if (K.field == Field::Complex) {
        for (int r = 0; r < q; ++r)
            roots[r] = Cx(std::cos(2.0 * kPi * r / q), std::sin(2.0 * kPi * r / q));
    } else {
        roots[0] = Cx(1, 0);
        roots[1] = Cx(-1, 0);
    }

    long long total = 1;
    for (int j = 0; j <= n; ++j) total *= arity;

    threads = std::max(1, threads);
    std::vector<std::optional<long long>> first_fail(threads);
    std::vector<std::thread> pool;
    auto worker = [&](int tid, long long lo, long long hi) {
        CxVec x(n + 1);
        for (long long c = lo; c < hi; ++c) {
            long long rem = c;
            for (int j = n; j >= 0; --j) {
                x[j] = roots[rem % arity];
                rem /= arity;
            }
            bool hit = false;
            for (const auto& d : dirs.dirs) {
                if (illuminates_canonical(x, d.coeffs, K.lambda, t_depth, margin)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                first_fail[tid] = c;
                return;
            }
        }
    };
    if (threads == 1) {
        worker(0, 0, total);
    } else {
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, t, total * t / threads, total * (t + 1) / threads);
        for (auto& th : pool) th.join();
    }

    IlluminationReport rep;
    rep.candidates = total;
    std::optional<long long> fail;
    for (const auto& f : first_fail)
        if (f && (!fail || *f < *fail)) fail = f;
    rep.pass = !fail.has_value();
    if (fail) {
        CxVec x(n + 1);
        long long rem = *fail;
        for (int j = n; j >= 0; --j) {
            x[j] = roots[rem % arity];
            rem /= arity;
        }
        rep.first_unilluminated = x;
    }
    return rep;
}

ArcMeasure fractional_measure(const CanonicalZonotope& K) {
    require_canonical(K);
    if (K.field != Field::Complex)
        throw NotCanonical("fractional_measure: complex form required");
    const int n = K.n;
    ArcMeasure mu;
    mu.arcs.n = n;
    for (int bits = 0; bits < (1 << (n - 2)); ++bits) {
        for (int v = 0; v < 3; ++v) {
            Direction d;
            std::vector<Rat> coeffs = real_direction_coeffs(n, bits, v);
            d.coeffs.resize(n + 1);
            for (int j = 0; j <= n; ++j) d.coeffs[j] = Cx(coeffs[j].convert_to<double>(), 0.0);
            d.ambient = ambient_of(K, d.coeffs);
            d.weight = 1.0;
            mu.arcs.dirs.push_back(std::move(d));
        }
    }
    mu.total_mass = static_cast<double>(mu.arcs.dirs.size());
    return mu;
}

ThetaCheckResult theta_full_measure_check(const CanonicalZonotope& K, const ArcMeasure& mu,
                                          int n_samples, int theta_grid, double threshold,
                                          std::uint64_t seed) {
    require_canonical(K);
    const int n = K.n;
    SplitMix64 rng(seed);
    ThetaCheckResult res;
    res.samples = n_samples;
    for (int s = 0; s < n_samples; ++s) {
        CxVec x(n + 1);
        std::vector<double> args(n + 1);
        for (int j = 0; j <= n; ++j) {
            args[j] = 2.0 * kPi * rng.uniform();
            x[j] = Cx(std::cos(args[j]), std::sin(args[j]));
        }
        int valid = 0, good = 0;
        for (int l = 0; l < theta_grid; ++l) {
            double theta = kPi * (l + 0.5) / theta_grid;
            bool orthogonal = false;
            for (int j = 0; j <= n; ++j)
                if (std::fabs(std::cos(theta - args[j])) < 1e-9) orthogonal = true;
            if (orthogonal) continue;
            ++valid;
            Cx rot(std::cos(theta), std::sin(theta));
            for (const auto& y : mu.arcs.dirs) {
                CxVec rotated(n + 1);
                for (int j = 0; j <= n; ++j) rotated[j] = rot * y.coeffs[j];
                if (illuminates_canonical(x, rotated, K.lambda)) {
                    ++good;
                    break;
                }
            }
        }
        double frac = valid ? double(good) / valid : 0.0;
        res.min_fraction = std::min(res.min_fraction, frac);
        if (frac >= threshold) ++res.passed;
    }
    return res;
}

}  // namespace illumcover

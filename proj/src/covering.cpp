#include "illumcover/covering.hpp"

#include "axis_detail.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace illumcover {

namespace {

enum Membership { kOut = 0, kIn = 1, kBorder = 2 };

// Per-axis cube-membership bitmasks over the sample values. `maybe` is
// in|border; in exact mode the two coincide.
struct AxisMasks {
    int nsamples = 0;
    int words = 0;
    std::vector<std::uint64_t> in;
    std::vector<std::uint64_t> maybe;

    const std::uint64_t* in_row(int s) const { return in.data() + std::size_t(s) * words; }
    const std::uint64_t* maybe_row(int s) const { return maybe.data() + std::size_t(s) * words; }
};

bool any_bit(const std::uint64_t* w, int words) {
    for (int i = 0; i < words; ++i)
        if (w[i]) return true;
    return false;
}

void and_rows(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, int words) {
    for (int i = 0; i < words; ++i) out[i] = a[i] & b[i];
}

struct ScanOutcome {
    enum class Kind { Covered, Uncovered, Inconclusive } kind = Kind::Covered;
    std::vector<int> witness_idx;
    long long grid = 1;
};

struct ChunkResult {
    bool found_uncovered = false;
    bool found_inconclusive = false;
    std::vector<int> uncovered_idx;
    std::vector<int> inconclusive_idx;
};

// Depth-first product scan of one range of the first axis. Stops at the first
// definitely-uncovered tuple (lexicographic order within the chunk).
class ChunkScanner {
  public:
    ChunkScanner(const std::vector<AxisMasks>& axes, int words)
        : axes_(axes), n_(static_cast<int>(axes.size())), words_(words) {
        partial_in_.assign(std::size_t(n_ + 1) * words, ~0ULL);
        partial_maybe_.assign(std::size_t(n_ + 1) * words, ~0ULL);
        idx_.assign(n_, 0);
    }

    ChunkResult run(int lo, int hi) {
        for (int s = lo; s < hi && !result_.found_uncovered; ++s) descend(0, s);
        return result_;
    }

  private:
    std::uint64_t* pin(int d) { return partial_in_.data() + std::size_t(d) * words_; }
    std::uint64_t* pmaybe(int d) { return partial_maybe_.data() + std::size_t(d) * words_; }

    void record_uncovered_subtree(int depth) {
        result_.found_uncovered = true;
        result_.uncovered_idx = idx_;
        for (int d = depth + 1; d < n_; ++d) result_.uncovered_idx[d] = 0;
    }

    void descend(int depth, int s) {
        idx_[depth] = s;
        and_rows(pin(depth), axes_[depth].in_row(s), pin(depth + 1), words_);
        and_rows(pmaybe(depth), axes_[depth].maybe_row(s), pmaybe(depth + 1), words_);
        if (!any_bit(pmaybe(depth + 1), words_)) {
            record_uncovered_subtree(depth);
            return;
        }
        if (depth == n_ - 1) {
            if (any_bit(pin(depth + 1), words_)) return;
            if (!result_.found_inconclusive) {
                result_.found_inconclusive = true;
                result_.inconclusive_idx = idx_;
            }
            return;
        }
        const int ns = axes_[depth + 1].nsamples;
        for (int t = 0; t < ns && !result_.found_uncovered; ++t) descend(depth + 1, t);
    }

    const std::vector<AxisMasks>& axes_;
    int n_;
    int words_;
    std::vector<std::uint64_t> partial_in_, partial_maybe_;
    std::vector<int> idx_;
    ChunkResult result_;
};

ScanOutcome scan_masks(const std::vector<AxisMasks>& axes, int words, int threads) {
    ScanOutcome out;
    for (const auto& ax : axes) out.grid *= ax.nsamples;
    const int n0 = axes[0].nsamples;
    threads = std::max(1, std::min(threads, n0));

    std::vector<ChunkResult> results(threads);
    if (threads == 1) {
        results[0] = ChunkScanner(axes, words).run(0, n0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            int lo = n0 * t / threads;
            int hi = n0 * (t + 1) / threads;
            pool.emplace_back([&axes, words, lo, hi, t, &results] {
                results[t] = ChunkScanner(axes, words).run(lo, hi);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& r : results) {
        if (r.found_uncovered) {
            out.kind = ScanOutcome::Kind::Uncovered;
            out.witness_idx = r.uncovered_idx;
            return out;
        }
    }
    for (const auto& r : results) {
        if (r.found_inconclusive) {
            out.kind = ScanOutcome::Kind::Inconclusive;
            out.witness_idx = r.inconclusive_idx;
            return out;
        }
    }
    out.kind = ScanOutcome::Kind::Covered;
    return out;
}

using detail::arrangement_samples;
using detail::arrangement_samples_f;
using detail::wrap1;
using detail::wrap1f;

Membership classify_exact(const Rat& base, const Rat& side, const Rat& sample) {
    Rat d = wrap1(sample - base);
    return (d > 0 && d < side) ? kIn : kOut;
}

Membership classify_float(double base, double side, double sample, double margin) {
    double d = wrap1f(sample - base);
    if (d <= margin || d >= 1.0 - margin) return kBorder;
    if (std::fabs(d - side) <= margin) return kBorder;
    return d < side ? kIn : kOut;
}

}  // namespace

CubeCover construct_cover(int n, int m) {
    if (n < 1) throw DomainError("construct_cover: n must be >= 1");
    if (m < 2) throw DomainError("construct_cover: m must be >= 2");
    Int b0 = lower_bound_unit_fraction(n, m);
    if (b0 > 2000000) throw DomainError("construct_cover: cover of size " + b0.str() + " is too large");
    const long long count = b0.convert_to<long long>();

    CubeCover cover;
    cover.dim = n;
    cover.mode = Mode::Exact;
    cover.side = Rat(1, m);
    cover.side_f = 1.0 / m;
    cover.bases.reserve(count);
    for (long long k = 1; k <= count; ++k) {
        std::vector<UnitRat> coords(n);
        Int pw = 1;
        for (int j = 0; j < n; ++j) {
            coords[j] = UnitRat::wrap(Rat(k * pw, b0));
            pw *= m;
        }
        cover.bases.emplace_back(std::move(coords));
    }
    return cover;
}

bool cube_contains(const TorusPoint& base, const Rat& side, const TorusPoint& x) {
    if (base.dim() != x.dim()) throw DimensionMismatch("cube_contains: dimension mismatch");
    for (int j = 0; j < base.dim(); ++j) {
        Rat d = oriented_distance(base.coords[j], x.coords[j]).value;
        if (!(d > 0 && d < side)) return false;
    }
    return true;
}

bool cover_contains(const CubeCover& cover, const TorusPoint& x) {
    if (cover.mode != Mode::Exact) throw DomainError("cover_contains: exact cover required");
    for (const auto& b : cover.bases)
        if (cube_contains(b, cover.side, x)) return true;
    return false;
}

Ternary cube_contains_f(const std::vector<double>& base, double side, const std::vector<double>& x,
                        double margin) {
    if (base.size() != x.size()) throw DimensionMismatch("cube_contains_f: dimension mismatch");
    bool border = false;
    for (std::size_t j = 0; j < base.size(); ++j) {
        double d = wrap1f(x[j] - base[j]);
        if (d <= margin || d >= 1.0 - margin || std::fabs(d - side) <= margin) {
            border = true;
            continue;
        }
        if (!(d > 0 && d < side)) return Ternary::False;
    }
    return border ? Ternary::Inconclusive : Ternary::True;
}

CoverCertificate verify_cover(const CubeCover& cover, int threads) {
    const int n = cover.dim;
    if (n < 1) throw DomainError("verify_cover: dimension must be >= 1");

    CoverCertificate cert;
    cert.mode = cover.mode;
    cert.margin = cover.mode == Mode::Float ? cover.margin : 0.0;

    const std::size_t ncubes = cover.size();
    if (ncubes == 0) {
        cert.verdict = Verdict::Uncovered;
        if (cover.mode == Mode::Exact)
            cert.witness = TorusPoint(std::vector<UnitRat>(n));
        else
            cert.witness_f.assign(n, 0.0);
        cert.candidate_grid_size = 0;
        return cert;
    }
    const int words = static_cast<int>((ncubes + 63) / 64);

    std::vector<AxisMasks> axes(n);
    std::vector<std::vector<Rat>> samples(n);
    std::vector<std::vector<double>> samples_f(n);

    for (int j = 0; j < n; ++j) {
        AxisMasks& ax = axes[j];
        if (cover.mode == Mode::Exact) {
            if (!(cover.side > 0 && cover.side < 1))
                throw DomainError("verify_cover: side must lie in (0,1)");
            std::vector<Rat> endpoints;
            endpoints.reserve(2 * ncubes);
            for (const auto& b : cover.bases) {
                if (b.dim() != n) throw DimensionMismatch("verify_cover: base has wrong length");
                endpoints.push_back(b.coords[j].value);
                endpoints.push_back(wrap1(b.coords[j].value + cover.side));
            }
            samples[j] = arrangement_samples(std::move(endpoints));
            ax.nsamples = static_cast<int>(samples[j].size());
            ax.words = words;
            ax.in.assign(std::size_t(ax.nsamples) * words, 0);
            ax.maybe.assign(std::size_t(ax.nsamples) * words, 0);
            for (int s = 0; s < ax.nsamples; ++s) {
                for (std::size_t i = 0; i < ncubes; ++i) {
                    if (classify_exact(cover.bases[i].coords[j].value, cover.side, samples[j][s]) == kIn) {
                        ax.in[std::size_t(s) * words + i / 64] |= 1ULL << (i % 64);
                        ax.maybe[std::size_t(s) * words + i / 64] |= 1ULL << (i % 64);
                    }
                }
            }
        } else {
            std::vector<double> endpoints;
            endpoints.reserve(2 * ncubes);
            for (const auto& b : cover.bases_f) {
                if (static_cast<int>(b.size()) != n)
                    throw DimensionMismatch("verify_cover: base has wrong length");
                endpoints.push_back(wrap1f(b[j]));
                endpoints.push_back(wrap1f(b[j] + cover.side_f));
            }
            samples_f[j] = arrangement_samples_f(std::move(endpoints), cover.margin);
            ax.nsamples = static_cast<int>(samples_f[j].size());
            ax.words = words;
            ax.in.assign(std::size_t(ax.nsamples) * words, 0);
            ax.maybe.assign(std::size_t(ax.nsamples) * words, 0);
            for (int s = 0; s < ax.nsamples; ++s) {
                for (std::size_t i = 0; i < ncubes; ++i) {
                    Membership cls =
                        classify_float(cover.bases_f[i][j], cover.side_f, samples_f[j][s], cover.margin);
                    if (cls != kOut) {
                        ax.maybe[std::size_t(s) * words + i / 64] |= 1ULL << (i % 64);
                        if (cls == kIn) ax.in[std::size_t(s) * words + i / 64] |= 1ULL << (i % 64);
                    }
                }
            }
        }
    }

    ScanOutcome outcome = scan_masks(axes, words, threads);
    cert.candidate_grid_size = outcome.grid;
    switch (outcome.kind) {
        case ScanOutcome::Kind::Covered:
            cert.verdict = Verdict::Covered;
            break;
        case ScanOutcome::Kind::Uncovered: {
            cert.verdict = Verdict::Uncovered;
            if (cover.mode == Mode::Exact) {
                std::vector<UnitRat> w(n);
                for (int j = 0; j < n; ++j) w[j] = UnitRat::wrap(samples[j][outcome.witness_idx[j]]);
                cert.witness = TorusPoint(std::move(w));
            } else {
                cert.witness_f.resize(n);
                for (int j = 0; j < n; ++j) cert.witness_f[j] = samples_f[j][outcome.witness_idx[j]];
            }
            break;
        }
        case ScanOutcome::Kind::Inconclusive: {
            std::ostringstream os;
            os << "verify_cover: grid point (";
            for (int j = 0; j < n; ++j)
                os << (j ? "," : "") << samples_f[j][outcome.witness_idx[j]];
            os << ") is within margin " << cover.margin << " of a cube boundary";
            throw FloatModeInconclusive(os.str());
        }
    }
    return cert;
}

Int lower_bound_unit_fraction(int n, int m) {
    if (n < 1) throw DomainError("lower_bound_unit_fraction: n must be >= 1");
    if (m < 2) throw DomainError("lower_bound_unit_fraction: m must be >= 2");
    Int num = boost::multiprecision::pow(Int(m), n + 1) - 1;
    return num / (m - 1);
}

Int lower_bound_recurrence(int n, const Rat& eps) {
    if (n < 0) throw DomainError("lower_bound_recurrence: n must be >= 0");
    if (!(eps > 0 && eps < 1)) throw DomainError("lower_bound_recurrence: eps must lie in (0,1)");
    const Int p = boost::multiprecision::numerator(eps);
    const Int q = boost::multiprecision::denominator(eps);
    Int a = 1;
    for (int i = 0; i < n; ++i) a = (a * q) / p + 1;
    return a;
}

Int lower_bound_recurrence_f(int n, double eps) {
    if (!(eps > 0 && eps < 1)) throw DomainError("lower_bound_recurrence_f: eps must lie in (0,1)");
    // Round eps up by a couple of ulps: a_n is antitone in eps, so the result
    // remains a valid lower bound for the intended (possibly irrational) side.
    Rat r(eps);
    r += r / Rat(Int(1) << 50);
    if (r >= 1) return 1;
    return lower_bound_recurrence(n, r);
}

Int closed_cube_lower_bound(int n, const Rat& eps) {
    if (n < 0) throw DomainError("closed_cube_lower_bound: n must be >= 0");
    if (!(eps > 0 && eps < 1)) throw DomainError("closed_cube_lower_bound: eps must lie in (0,1)");
    const Int p = boost::multiprecision::numerator(eps);
    const Int q = boost::multiprecision::denominator(eps);
    Int b = 1;
    for (int i = 0; i < n; ++i) b = (b * q + p - 1) / p;
    return b;
}

Int exact_value_2d(const Rat& eps) {
    if (!(eps > 0 && eps < 1)) throw DomainError("exact_value_2d: eps must lie in (0,1)");
    const Int p = boost::multiprecision::numerator(eps);
    const Int q = boost::multiprecision::denominator(eps);
    Int f1 = q / p;                    // floor(1/eps)
    return (q * (f1 + 1)) / p + 1;     // floor((1/eps)(floor(1/eps)+1)) + 1
}

std::optional<Int> exact_value_3d(const Rat& eps) {
    if (!(eps > 0 && eps <= 1)) throw DomainError("exact_value_3d: eps must lie in (0,1]");
    if (eps > Rat(2, 3) && eps <= Rat(3, 4)) return Int(5);
    if (eps > Rat(3, 5) && eps <= Rat(2, 3)) return Int(7);
    const Int p = boost::multiprecision::numerator(eps);
    const Int q = boost::multiprecision::denominator(eps);
    const Int mfloor = q / p;
    for (Int m = mfloor; m <= mfloor + 1; ++m) {
        if (m < 1) continue;
        Int s3 = m * m * m + m * m + m + 1;
        // (1/(m + 1/(m^2+m+1)), 1/m]  ->  m^3+m^2+m+1
        if (eps > Rat(m * m + m + 1, s3) && eps <= Rat(1, m)) return s3;
        // (1/m, 1/(m - 1/(m^2-1))]  ->  m^3
        if (m >= 2 && eps > Rat(1, m) && eps <= Rat(m * m - 1, m * m * m - m - 1))
            return Int(m * m * m);
    }
    return std::nullopt;
}

std::optional<Int> exact_value_3d_f(double eps, double margin) {
    if (!(eps > 0 && eps <= 1)) throw DomainError("exact_value_3d_f: eps must lie in (0,1]");
    const long long mf = static_cast<long long>(std::floor(1.0 / eps));
    std::vector<double> boundaries = {3.0 / 4, 2.0 / 3, 3.0 / 5};
    for (long long m = std::max(1LL, mf - 1); m <= mf + 2; ++m) {
        double m2 = double(m) * m, m3 = m2 * m;
        boundaries.push_back(1.0 / m);
        boundaries.push_back((m2 + m + 1) / (m3 + m2 + m + 1));
        if (m >= 2) boundaries.push_back((m2 - 1) / (m3 - m - 1));
    }
    for (double b : boundaries)
        if (std::fabs(eps - b) <= margin) return std::nullopt;
    return exact_value_3d(Rat(eps));
}

}  // namespace illumcover

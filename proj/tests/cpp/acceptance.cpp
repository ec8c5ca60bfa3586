// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "illumcover/fractional.hpp"
#include "illumcover/io.hpp"
#include "illumcover/polydisc.hpp"
#include "illumcover/zonoid.hpp"
#include "illumcover/zonotope.hpp"
#include "zono_fixtures.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace illumcover;
using illumcover::testing::random_complex_canonical;
using illumcover::testing::random_real_canonical;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct Criterion {
    int id;
    std::string name;
    std::function<std::string()> body;  // returns detail, throws on failure
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

void run_criterion(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    try {
        std::string detail = c.body();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("PASS criterion %2d [%6.2fs] %s%s%s\n", c.id, secs, c.name.c_str(),
                    detail.empty() ? "" : ": ", detail.c_str());
    } catch (const std::exception& e) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("FAIL criterion %2d [%6.2fs] %s: %s\n", c.id, secs, c.name.c_str(), e.what());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::string run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    expect(pipe != nullptr, "cannot spawn CLI");
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int rc = pclose(pipe);
    expect(rc == 0, "CLI exited with status " + std::to_string(rc) + " for: " + args);
    return out;
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criteria ----

std::string crit1_polydisc_cli() {
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 16; ++k) {
        std::string out = run_cli("polydisc ill --n " + std::to_string(k));
        Int classical = boost::multiprecision::pow(Int(2), k + 1) - 1;
        Int frac = boost::multiprecision::pow(Int(2), k);
        std::ostringstream want;
        want << "classical=" << classical.str() << " fractional=" << frac.str() << "\n";
        expect(out == want.str(), "n=" + std::to_string(k) + " printed '" + out + "'");
    }
    double secs = elapsed(t0);
    expect(secs < 1.0, "runtime " + std::to_string(secs) + "s exceeds 1s");
    return "k=1..16";
}

std::string crit2_cover_certification() {
    for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        auto t0 = std::chrono::steady_clock::now();
        CubeCover cover = construct_cover(n, m);
        expect(Int(cover.size()) == lower_bound_unit_fraction(n, m),
               "wrong size at n=" + std::to_string(n) + " m=" + std::to_string(m));
        CoverCertificate cert = verify_cover(cover, 4);
        expect(cert.verdict == Verdict::Covered,
               "not covered at n=" + std::to_string(n) + " m=" + std::to_string(m));
        double secs = elapsed(t0);
        expect(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
    }
    // optional large case: 5 minute budget, 4 threads
    auto t0 = std::chrono::steady_clock::now();
    CubeCover big = construct_cover(4, 2);
    expect(big.size() == 31, "construct_cover(4,2) size");
    expect(verify_cover(big, 4).verdict == Verdict::Covered, "(4,2) not covered");
    double secs = elapsed(t0);
    expect(secs < 300.0, "(4,2) runtime " + std::to_string(secs) + "s exceeds 5min");
    char buf[64];
    std::snprintf(buf, sizeof buf, "(4,2) in %.2fs", secs);
    return std::string("7 pairs + optional ") + buf;
}

std::string crit3_boltyanski_martini() {
    CubeCover cover;
    cover.dim = 2;
    cover.side = Rat(1, 2);
    for (int k = 0; k < 7; ++k)
        cover.bases.push_back(TorusPoint({UnitRat::wrap(Rat(k, 3)), UnitRat::wrap(Rat(k, 7))}));
    CoverCertificate cert = verify_cover(cover);
    expect(cert.verdict == Verdict::Uncovered, "cover was accepted");
    TorusPoint bad({UnitRat::wrap(Rat(5, 6)), UnitRat::wrap(Rat(3, 14))});
    expect(!cover_contains(cover, bad), "(5/6, 3/14) reported covered");
    return "rejected, witness (5/6,3/14) confirmed uncovered";
}

std::string crit4_recurrence_concordance() {
    SplitMix64 rng(0x4242ULL);
    for (int i = 0; i < 500; ++i) {
        long long q = 2 + static_cast<long long>(rng.below(2000));
        long long p = 1 + static_cast<long long>(rng.below(q - 1));
        Rat eps(p, q);
        expect(lower_bound_recurrence(2, eps) == exact_value_2d(eps),
               "mismatch at eps=" + rational_string(eps));
    }
    for (int n = 1; n <= 6; ++n)
        for (int m = 2; m <= 6; ++m)
            expect(lower_bound_recurrence(n, Rat(1, m)) == lower_bound_unit_fraction(n, m),
                   "unit fraction mismatch");
    return "500 random rationals + n,m <= 6";
}

std::string crit5_table_3d() {
    struct Row {
        Rat eps, lo, hi;
        Int want;
    };
    // one sample per tabulated case, interval membership checked exactly
    std::vector<Row> rows = {
        {Rat(9, 10), Rat(3, 4), Rat(1), Int(4)},
        {Rat(7, 10), Rat(2, 3), Rat(3, 4), Int(5)},
        {Rat(31, 50), Rat(3, 5), Rat(2, 3), Int(7)},
        {Rat(11, 20), Rat(1, 2), Rat(3, 5), Int(8)},
        {Rat(1, 2), Rat(7, 15), Rat(1, 2), Int(15)},       // m=2: m^3+m^2+m+1
        {Rat(49, 100), Rat(7, 15), Rat(1, 2), Int(15)},    // 0.49 sits here too
        {Rat(17, 50), Rat(1, 3), Rat(8, 23), Int(27)},     // m=3: m^3
    };
    for (const auto& r : rows) {
        expect(r.eps > r.lo && r.eps <= r.hi,
               "sample " + rational_string(r.eps) + " not in its interval");
        auto v = exact_value_3d(r.eps);
        expect(v.has_value(), "not tabulated: " + rational_string(r.eps));
        expect(*v == r.want, "wrong value at " + rational_string(r.eps));
    }
    expect(!exact_value_3d(Rat(2, 5)).has_value(), "gap value should be NotTabulated");
    return "six cases + gap";
}

std::string crit6_search() {
    auto t0 = std::chrono::steady_clock::now();
    SearchResult r2 = search_minimal_cover(2, Rat(1, 2), 14, 1000000);
    expect(r2.cover.size() == 7, "q=14 search size " + std::to_string(r2.cover.size()));
    expect(verify_cover(r2.cover).verdict == Verdict::Covered, "q=14 result not covering");
    SearchResult r1 = search_minimal_cover(1, Rat(1, 2), 6, 1000000);
    expect(r1.cover.size() == 3, "q=6 search size " + std::to_string(r1.cover.size()));
    double secs = elapsed(t0);
    expect(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
    return "sizes 7 and 3, nodes " + std::to_string(r2.nodes) + "/" + std::to_string(r1.nodes);
}

std::string crit7_fractional() {
    for (int n = 1; n <= 3; ++n) {
        Rat want = fractional_covering_number(n, Rat(1, 2));
        for (int k : {4, 6, 8}) {
            LpReport rep = lp_fractional_cover(n, Rat(1, 2), k);
            Rat diff = rep.primal - want;
            if (diff < 0) diff = -diff;
            expect(diff < Rat(1, 1000000),
                   "lp(" + std::to_string(n) + ",1/2," + std::to_string(k) + ") off by " +
                       rational_string(diff));
            expect(rep.gap < Rat(1, 1000000), "duality gap too large");
        }
        UniformMeasureReport um = uniform_measure_certificate(n, Rat(1, 2));
        expect(um.analytic_ok && um.samples_ok, "uniform certificate failed");
    }
    return "n=1..3, k in {4,6,8}";
}

std::string crit8_light_sources() {
    expect(std::fabs(light_source_side(2.0) - 1.0 / 3.0) < 1e-12, "eps_2 != 1/3");
    for (int n = 1; n <= 5; ++n) {
        LightSourceCount c = light_source_number(n, 2.0);
        Int want = (boost::multiprecision::pow(Int(3), n + 1) - 1) / 2;
        expect(c.exact.has_value(), "no exact value at n=" + std::to_string(n));
        expect(*c.exact == want, "wrong value at n=" + std::to_string(n));
    }
    return "eps_2 = 1/3, ill_2 for n <= 5";
}

std::string crit9_real_zonotopes() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(0x99aaULL);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 3;
        CanonicalZonotope K = random_real_canonical(rng, n);
        DirectionSet Y = real_illuminating_set(K);
        expect(Y.dirs.size() == (std::size_t(3) << (n - 2)), "set size");
        for (int bits = 0; bits < (1 << (n + 1)); ++bits) {
            std::vector<int> signs(n + 1);
            for (int j = 0; j <= n; ++j) signs[j] = (bits >> j) & 1 ? -1 : 1;
            RationalWitness w = real_witness_for(K.lambda, signs);
            expect(w.max_abs <= Rat(5, 6), "witness modulus above 5/6");
            expect(w.dir_index >= 0 && w.dir_index < int(Y.dirs.size()), "bad witness index");
        }
    }
    double secs = elapsed(t0);
    expect(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
    return "50 zonotopes, all sign vertices, max |y| <= 5/6";
}

std::string crit10_complex_zonotopes() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(0xbb77ULL);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 2;
        CanonicalZonotope K = random_complex_canonical(rng, n);
        DirectionSet full = complex_illuminating_set(K);
        expect(Int(full.dirs.size()) == boost::multiprecision::pow(Int(2), n + 1) - 2,
               "set size");
        IlluminationReport rep = verify_illumination(K, full, 24, 4);
        expect(rep.pass, "verification failed at trial " + std::to_string(trial));

        DirectionSet v1_only;
        v1_only.n = full.n;
        v1_only.dirs.assign(full.dirs.begin(), full.dirs.begin() + full.dirs.size() / 2);
        IlluminationReport fail = verify_illumination(K, v1_only, 24, 4);
        expect(!fail.pass, "V1 alone unexpectedly passed");
        const CxVec& x = *fail.first_unilluminated;
        expect(std::abs(x[n - 1] + x[n]) < 1e-9, "failure witness lacks x_n = -x_{n+1}");
    }
    double secs = elapsed(t0);
    expect(secs < 300.0, "runtime " + std::to_string(secs) + "s exceeds 5min");
    return "20 zonotopes at q=24, V3 necessity confirmed";
}

std::string crit11_fractional_measure() {
    SplitMix64 rng(0xcc11ULL);
    for (int n = 2; n <= 4; ++n) {
        CanonicalZonotope K = random_complex_canonical(rng, n);
        ArcMeasure mu = fractional_measure(K);
        double bound = std::pow(2.0, n);
        expect(mu.total_mass == 3.0 * std::pow(2.0, n - 2), "mass formula");
        expect(mu.total_mass < bound, "mass not below 2^n");
        ThetaCheckResult res = theta_full_measure_check(K, mu, 100, 48, 0.95);
        expect(res.passed == res.samples,
               "theta check: " + std::to_string(res.passed) + "/" +
                   std::to_string(res.samples) + " at n=" + std::to_string(n) +
                   " (min fraction " + std::to_string(res.min_fraction) + ")");
    }
    return "n=2..4, 100 samples each at the 95% threshold";
}

std::string crit12_zonoid() {
    SplitMix64 rng(0xdd22ULL);
    for (int trial = 0; trial < 100; ++trial) {
        CxVec x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
            y[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
        }
        IdentityReport rep = complex_real_identity_check(x, y, 4096);
        expect(rep.error < 1e-6, "identity error " + std::to_string(rep.error));
    }

    const int n = 2;
    std::vector<CxVec> base = {{Cx(1, 0), Cx(0, 0)},
                               {Cx(0, 0), Cx(1, 0)},
                               {Cx(std::sqrt(0.5), 0), Cx(0, std::sqrt(0.5))}};
    DiscreteZonoid exact_z = make_discrete_zonoid(n, base, {2.0, 1.0, 3.0});
    std::vector<Cluster> singletons = {{0, {0}}, {1, {1}}, {2, {2}}};
    SummandResult exact_res = summand_extraction(exact_z, singletons, 1e-2);
    expect(exact_res.hausdorff_estimate == 0.0, "zero-width estimate not exactly 0");

    const double delta = 1e-2 * (n + 1);
    std::vector<CxVec> atoms;
    std::vector<double> weights;
    std::vector<Cluster> clusters(n + 1);
    int idx = 0;
    for (int j = 0; j <= n; ++j) {
        clusters[j].representative = idx;
        for (int rep = 0; rep < 4; ++rep) {
            CxVec a = base[j];
            if (rep > 0)
                for (int c = 0; c < n; ++c)
                    a[c] += Cx((rng.uniform() - 0.5) * 2e-3, (rng.uniform() - 0.5) * 2e-3);
            atoms.push_back(a);
            weights.push_back(0.5 + rng.uniform());
            clusters[j].members.push_back(idx++);
        }
    }
    SummandResult res =
        summand_extraction(make_discrete_zonoid(n, atoms, weights), clusters, delta);
    expect(res.within_delta, "perturbed estimate " + std::to_string(res.hausdorff_estimate) +
                                 " not below delta " + std::to_string(delta));
    expect(res.summand_ok, "summand property violated");
    return "identity at q=4096, exact and perturbed summands";
}

std::string crit13_property_suites() {
    SplitMix64 rng(0xee33ULL);

    int done = 0;
    while (done < 1000) {  // complement identity
        long long q1 = 2 + (long long)rng.below(999), q2 = 2 + (long long)rng.below(999);
        UnitRat a = UnitRat::wrap(Rat((long long)rng.below(q1), q1));
        UnitRat b = UnitRat::wrap(Rat((long long)rng.below(q2), q2));
        if (a == b) continue;
        expect(oriented_distance(a, b).value + oriented_distance(b, a).value == 1,
               "complement identity");
        ++done;
    }

    for (int trial = 0; trial < 1000; ++trial) {  // cyclic-order telescoping
        std::vector<UnitRat> pts;
        std::size_t len = 1 + rng.below(7);
        for (std::size_t i = 0; i < len; ++i) {
            long long q = 2 + (long long)rng.below(60);
            pts.push_back(UnitRat::wrap(Rat((long long)rng.below(q), q)));
        }
        auto ord = cyclic_order(pts);
        for (std::size_t i = 0; i < ord.size(); ++i) {
            for (std::size_t j = i + 1; j < ord.size(); ++j) {
                Rat total = 0;
                for (std::size_t l = i; l < j; ++l)
                    total += oriented_distance(ord[l], ord[l + 1]).value;
                expect(oriented_distance(ord[i], ord[j]).value == total, "telescoping");
            }
        }
    }

    done = 0;
    while (done < 1000) {  // scaling
        Int k = 2 + rng.below(9);
        long long q = 2 + (long long)rng.below(999);
        UnitRat a = UnitRat::wrap(Rat((long long)rng.below(q), q));
        long long q2 = 2 + (long long)rng.below(999);
        UnitRat b = UnitRat::wrap(Rat((long long)rng.below(q2), q2));
        Rat d = oriented_distance(a, b).value;
        if (!(d < Rat(1, k))) continue;
        expect(oriented_distance(scale(k, a), scale(k, b)).value == Rat(k) * d, "scaling");
        ++done;
    }

    for (int trial = 0; trial < 1000; ++trial) {  // MEC monotonicity
        std::vector<Cx> pts;
        int count = 1 + int(rng.below(8));
        for (int i = 0; i < count; ++i)
            pts.emplace_back(rng.uniform() * 4 - 2, rng.uniform() * 4 - 2);
        Circle before = min_enclosing_circle(pts);
        pts.emplace_back(rng.uniform() * 4 - 2, rng.uniform() * 4 - 2);
        Circle after = min_enclosing_circle(pts);
        expect(after.radius >= before.radius - 1e-12, "MEC monotonicity");
    }

    for (int trial = 0; trial < 1000; ++trial) {  // witness re-validation
        int n = 2 + int(rng.below(4));
        std::vector<int> lambda(n + 1, 0);
        for (int j = 0; j < n - 2; ++j) lambda[j] = int(rng.below(2));
        lambda[n - 2] = lambda[n - 1] = lambda[n] = 1;
        std::vector<int> signs(n + 1);
        for (int j = 0; j <= n; ++j) signs[j] = rng.below(2) ? 1 : -1;
        RationalWitness w = real_witness_for(lambda, signs);
        for (int j = 0; j <= n; ++j) {
            Rat mod = w.coeffs[j] < 0 ? Rat(-w.coeffs[j]) : w.coeffs[j];
            expect(mod < 1, "witness re-validation");
        }
    }

    {  // support function properties
        std::vector<CxVec> atoms;
        std::vector<double> weights;
        for (int k = 0; k < 5; ++k) {
            CxVec a(3);
            for (int i = 0; i < 3; ++i) a[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
            atoms.push_back(a);
            weights.push_back(0.3 + rng.uniform());
        }
        DiscreteZonoid z = make_discrete_zonoid(3, atoms, weights);
        for (int trial = 0; trial < 1000; ++trial) {
            CxVec a(3), b(3);
            for (int i = 0; i < 3; ++i) {
                a[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
                b[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
            }
            double t = rng.uniform() * 6.283185307179586;
            CxVec rot(3);
            for (int i = 0; i < 3; ++i) rot[i] = Cx(std::cos(t), std::sin(t)) * a[i];
            expect(std::fabs(support_function(z, rot) - support_function(z, a)) < 1e-9,
                   "rotation invariance");
            CxVec sum(3);
            for (int i = 0; i < 3; ++i) sum[i] = a[i] + b[i];
            expect(support_function(z, sum) <=
                       support_function(z, a) + support_function(z, b) + 1e-9,
                   "sublinearity");
        }
    }
    return "six suites, >= 1000 cases each";
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: acceptance --cli <path-to-cli>\n");
        return 2;
    }

    std::vector<Criterion> criteria = {
        {1, "polydisc closed forms via CLI", crit1_polydisc_cli},
        {2, "cover construction + certification", crit2_cover_certification},
        {3, "Boltyanski-Martini regression", crit3_boltyanski_martini},
        {4, "recurrence/formula concordance", crit4_recurrence_concordance},
        {5, "3d table", crit5_table_3d},
        {6, "minimal-cover search", crit6_search},
        {7, "fractional covering LP", crit7_fractional},
        {8, "light sources", crit8_light_sources},
        {9, "real zonotope construction", crit9_real_zonotopes},
        {10, "complex zonotope construction", crit10_complex_zonotopes},
        {11, "fractional zonotope measure", crit11_fractional_measure},
        {12, "zonoid identity and summand", crit12_zonoid},
        {13, "property suites", crit13_property_suites},
    };
    for (const auto& c : criteria) run_criterion(c);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

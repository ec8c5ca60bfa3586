#include "doctest.h"

#include "illumcover/zonoid.hpp"

#include <cmath>

using namespace illumcover;

namespace {

CxVec e(int n, int i) {
    CxVec v(n, Cx(0, 0));
    v[i] = Cx(1, 0);
    return v;
}

DiscreteZonoid orthonormal_zonoid(int n) {
    std::vector<CxVec> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(e(n, i));
    return make_discrete_zonoid(n, atoms, std::vector<double>(n, 1.0));
}

CxVec random_cvec(SplitMix64& rng, int n) {
    CxVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
    return v;
}

}  // namespace

TEST_CASE("support function of the orthonormal zonoid") {
    DiscreteZonoid z = orthonormal_zonoid(3);
    CHECK(support_function(z, e(3, 0)) == doctest::Approx(1.0).epsilon(1e-12));

    CxVec diag = {Cx(1 / std::sqrt(2.0), 0), Cx(1 / std::sqrt(2.0), 0), Cx(0, 0)};
    CHECK(support_function(z, diag) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("support function is rotation invariant and sublinear") {
    SplitMix64 rng(0x50f7ULL);
    int n = 3;
    std::vector<CxVec> atoms;
    std::vector<double> weights;
    for (int k = 0; k < 6; ++k) {
        atoms.push_back(random_cvec(rng, n));
        weights.push_back(0.2 + rng.uniform());
    }
    DiscreteZonoid z = make_discrete_zonoid(n, atoms, weights);

    for (int trial = 0; trial < 1000; ++trial) {
        CxVec a = random_cvec(rng, n), b = random_cvec(rng, n);
        double t = rng.uniform() * 6.28318530717958647;
        CxVec rotated(n);
        for (int i = 0; i < n; ++i) rotated[i] = Cx(std::cos(t), std::sin(t)) * a[i];
        CHECK(std::fabs(support_function(z, rotated) - support_function(z, a)) < 1e-9);

        CxVec sum(n);
        for (int i = 0; i < n; ++i) sum[i] = a[i] + b[i];
        CHECK(support_function(z, sum) <=
              support_function(z, a) + support_function(z, b) + 1e-9);
    }
}

TEST_CASE("inner product averaging identity") {
    CxVec e1 = e(3, 0);
    IdentityReport same = complex_real_identity_check(e1, e1, 512);
    CHECK(same.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.error < 1e-9);

    IdentityReport orth = complex_real_identity_check(e(3, 0), e(3, 1), 512);
    CHECK(orth.lhs == 0.0);
    CHECK(orth.rhs == 0.0);

    SplitMix64 rng(0x1dc4ULL);
    for (int trial = 0; trial < 100; ++trial) {
        IdentityReport rep =
            complex_real_identity_check(random_cvec(rng, 3), random_cvec(rng, 3), 4096);
        CHECK(rep.error < 1e-6);
    }
}

TEST_CASE("identity quadrature error decays at the Simpson rate") {
    // keep x,y fixed and the node budget low enough that the error is far
    // from the noise floor, then double q
    SplitMix64 rng(0x9a3bULL);
    int improved = 0, measured = 0;
    for (int trial = 0; trial < 20; ++trial) {
        CxVec x = random_cvec(rng, 3), y = random_cvec(rng, 3);
        double e64 = complex_real_identity_check(x, y, 64).error;
        double e128 = complex_real_identity_check(x, y, 128).error;
        if (e64 < 1e-13) continue;  // already at machine noise
        ++measured;
        if (e64 / std::max(e128, 1e-18) >= 3.0) ++improved;
    }
    if (measured > 0) CHECK(improved >= measured * 3 / 4);
}

TEST_CASE("rotation averaging") {
    DiscreteZonoid real_z = orthonormal_zonoid(2);
    DiscreteZonoid avg = rotation_average(real_z);
    CHECK(avg.weights[0] == doctest::Approx(4.0 / (2 * 3.14159265358979324)).epsilon(1e-12));

    // averaging twice only rescales weights; atoms stay put
    DiscreteZonoid twice = rotation_average(avg);
    for (std::size_t k = 0; k < avg.atoms.size(); ++k) {
        CHECK(twice.atoms[k] == avg.atoms[k]);
        CHECK(twice.weights[k] ==
              doctest::Approx(avg.weights[k] * 4.0 / (2 * 3.14159265358979324)).epsilon(1e-12));
    }

    // sampled agreement between the averaged support and the t-average
    SplitMix64 rng(0x0a1bULL);
    for (int trial = 0; trial < 100; ++trial) {
        CxVec theta = random_cvec(rng, 2);
        double lhs = support_function(avg, theta);
        double rhs = averaged_real_support(real_z, theta, 4096);
        CHECK(std::fabs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("zonoid input validation") {
    CHECK_THROWS_AS(make_discrete_zonoid(2, {CxVec{Cx(0, 0), Cx(0, 0)}}, {1.0}), DomainError);
    CHECK_THROWS_AS(make_discrete_zonoid(2, {CxVec{Cx(1, 0), Cx(0, 0)}}, {0.0}), DomainError);
    CHECK_THROWS_AS(make_discrete_zonoid(2, {CxVec{Cx(1, 0)}}, {1.0}), DimensionMismatch);
}

TEST_CASE("summand extraction with zero-width clusters is exact") {
    const int n = 2;
    std::vector<CxVec> atoms = {e(n, 0), e(n, 1),
                                {Cx(1 / std::sqrt(2.0), 0), Cx(0, 1 / std::sqrt(2.0))}};
    DiscreteZonoid z = make_discrete_zonoid(n, atoms, {2.0, 1.0, 3.0});
    std::vector<Cluster> clusters = {{0, {0}}, {1, {1}}, {2, {2}}};
    SummandResult res = summand_extraction(z, clusters, 0.01, 2000);
    CHECK(res.m == 1.0);
    CHECK(res.hausdorff_estimate == 0.0);
    CHECK(res.within_delta);
    CHECK(res.summand_ok);
    CHECK(res.zonotope.vecs.size() == 3);
}

TEST_CASE("summand extraction with perturbed clusters stays within delta") {
    SplitMix64 rng(0x5e6dULL);
    const int n = 2;
    const double delta = 0.01 * (n + 1);
    std::vector<CxVec> base = {e(n, 0), e(n, 1),
                               {Cx(std::sqrt(0.5), 0), Cx(0, std::sqrt(0.5))}};
    std::vector<CxVec> atoms;
    std::vector<double> weights;
    std::vector<Cluster> clusters(n + 1);
    int idx = 0;
    for (int j = 0; j <= n; ++j) {
        clusters[j].representative = idx;
        for (int rep = 0; rep < 5; ++rep) {
            CxVec a = base[j];
            if (rep > 0)
                for (int c = 0; c < n; ++c)
                    a[c] += Cx((rng.uniform() - 0.5) * 2e-3, (rng.uniform() - 0.5) * 2e-3);
            atoms.push_back(a);
            weights.push_back(0.5 + rng.uniform());
            clusters[j].members.push_back(idx++);
        }
    }
    DiscreteZonoid z = make_discrete_zonoid(n, atoms, weights);
    SummandResult res = summand_extraction(z, clusters, delta, 2000);
    CHECK(res.hausdorff_estimate < delta);
    CHECK(res.within_delta);
    CHECK(res.summand_ok);

    // the scaled summand support never exceeds the zonoid's own support,
    // after undoing the 1/m scaling
    auto thetas = sphere_sample(n, 1000, 333);
    for (const auto& theta : thetas) {
        double hz = support_function(z, theta);
        double hz1 = res.m * support_function(res.summand_scaled, theta);
        CHECK(hz1 <= hz + 1e-9);
    }
}

TEST_CASE("summand extraction rejects wide clusters") {
    const int n = 2;
    std::vector<CxVec> atoms = {e(n, 0), e(n, 1), {Cx(0, 0), Cx(0, 1)},
                                {Cx(std::sqrt(0.5), 0), Cx(0, std::sqrt(0.5))}};
    DiscreteZonoid z = make_discrete_zonoid(n, atoms, {1, 1, 1, 1});
    // atoms 1 and 2 are far apart relative to delta/(n+1)
    std::vector<Cluster> clusters = {{0, {0}}, {1, {1, 2}}, {3, {3}}};
    CHECK_THROWS_AS(summand_extraction(z, clusters, 0.01, 100), ClusterTooWide);
}

TEST_CASE("sphere sample is deterministic and unit length") {
    auto s1 = sphere_sample(3, 50, 0);
    auto s2 = sphere_sample(3, 50, 0);
    REQUIRE(s1.size() == 50);
    for (int i = 0; i < 50; ++i) {
        CHECK(std::fabs(std::sqrt(std::abs(complex_inner(s1[i], s1[i]))) - 1.0) < 1e-12);
        for (int c = 0; c < 3; ++c) CHECK(s1[i][c] == s2[i][c]);
    }
}

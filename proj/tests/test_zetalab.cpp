#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tzlab/zetalab.hpp"

using namespace tzlab;
using namespace tzlab::zetalab;
using std::numbers::pi;

namespace {

constexpr double kZeta2 = pi * pi / 6.0;

// First 1000 critical-line zeros, computed once for the statistics tests.
const ZeroList& thousand_zeros() {
    static const ZeroList zl = [] {
        auto z = find_zeros(1420.0);
        z.ordinates.resize(1000);
        return z;
    }();
    return zl;
}

}  // namespace

TEST(PartialZeta, SmallSums) {
    EXPECT_EQ(partial_zeta(2.0, 1), cdouble(1.0));
    EXPECT_NEAR(partial_zeta(2.0, 3).real(), 1.0 + 0.25 + 1.0 / 9.0, 1e-15);
    EXPECT_THROW(partial_zeta(2.0, 0), DomainError);
}

TEST(PartialZeta, MillionTermsNearBasel) {
    // Tail sum_{n > N} n^-2 < 1/N.
    EXPECT_NEAR(partial_zeta(2.0, 1000000).real(), kZeta2, 1e-6);
}

TEST(PartialZeta, IntegralTailBoundsConvergence) {
    for (double s : {2.0, 3.0}) {
        const double exact = zeta(s).value.real();
        for (std::uint64_t n : {10u, 100u, 1000u}) {
            const double err = exact - partial_zeta(s, n).real();
            EXPECT_GT(err, 0.0);
            EXPECT_LE(err, std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0));
        }
    }
}

TEST(EulerProduct, Basics) {
    EXPECT_NEAR(euler_product(2.0, 2).real(), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(euler_product(2.0, 100000).real(), partial_zeta(2.0, 10000000).real(), 1e-5);
    EXPECT_THROW(euler_product(1.0, 100), DomainError);
    EXPECT_THROW(euler_product(cdouble(0.5, 14.0), 100), DomainError);
}

TEST(Zeta, BaselValue) {
    const auto z = zeta(2.0);
    EXPECT_NEAR(z.value.real(), 1.6449340668, 1e-10);
    EXPECT_NEAR(z.value.real(), kZeta2, 1e-13);
    EXPECT_GE(z.abs_err_bound, 0.0);
    EXPECT_LT(z.abs_err_bound, 1e-10);
    EXPECT_FALSE(z.degraded);
}

TEST(Zeta, FrozenReferenceValues) {
    // 30-digit reference evaluations.
    const std::pair<cdouble, cdouble> cases[] = {
        {{0.5, 100.0}, {2.69261988568132409, -0.0203860296025981618}},
        {{0.3, 5.0}, {0.675648998116023298, 0.254144786554677442}},
        {{3.0, 0.0}, {1.20205690315959429, 0.0}},
        {{0.9, -37.5}, {0.525366521613123566, 0.220287757369768769}},
        {{2.0, 1000.0}, {0.953262184346425154, -0.110723107460599814}},
        {{0.5, 9000.0}, {0.701354439292067253, 0.389912108813298683}},
    };
    for (const auto& [s, expect] : cases) {
        const auto z = zeta(s);
        EXPECT_LT(std::abs(z.value - expect), std::max(z.abs_err_bound, 1e-12)) << s;
        if (std::abs(s.imag()) <= 1000.0) {
            EXPECT_LT(z.abs_err_bound, 1e-10) << s;
        } else {
            EXPECT_FALSE(z.degraded) << s;
        }
    }
}

TEST(Zeta, FirstZeroIsSmall) { EXPECT_LT(std::abs(zeta(cdouble(0.5, 14.134725)).value), 1e-4); }

TEST(Zeta, SchwarzReflection) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> sig(0.05, 0.95), tt(-200.0, 200.0);
    for (int i = 0; i < 100; ++i) {
        const cdouble s(sig(rng), tt(rng));
        EXPECT_LE(std::abs(zeta(std::conj(s)).value - std::conj(zeta(s).value)), 1e-12) << s;
    }
}

TEST(Zeta, DomainErrors) {
    EXPECT_THROW(zeta(1.0), DomainError);
    EXPECT_THROW(zeta(cdouble(0.5, 2e4)), DomainError);
    EXPECT_THROW(zeta(cdouble(NAN, 0.0)), DomainError);
}

TEST(CompletedXi, FunctionalEquation) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> sig(0.1, 0.9), tt(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const cdouble s(sig(rng), tt(rng));
        const cdouble a = completed_xi(s);
        const cdouble b = completed_xi(1.0 - s);
        EXPECT_LT(std::abs(a - b) / std::abs(a), 1e-8) << s;
    }
    const cdouble s(0.3, 5.0);
    EXPECT_LT(std::abs(completed_xi(s) - cdouble(0.275520166668044729, -0.0133091981981203131)), 1e-12);
}

TEST(CompletedXi, CriticalPointAndReflection) {
    const auto half = completed_xi(0.5);
    EXPECT_NEAR(half.real(), 0.497120778188314110, 1e-12);
    EXPECT_EQ(half.imag(), 0.0);
    const cdouble s(0.37, 12.5);
    EXPECT_LT(std::abs(completed_xi(std::conj(s)) - std::conj(completed_xi(s))), 1e-14);
    EXPECT_EQ(completed_xi(1.0), cdouble(0.5));
    EXPECT_EQ(completed_xi(0.0), cdouble(0.5));
}

TEST(RiemannSiegel, BracketsFirstZero) {
    EXPECT_NE(std::signbit(riemann_siegel_Z(14.0)), std::signbit(riemann_siegel_Z(14.2)));
}

TEST(RiemannSiegel, ModulusAndRealness) {
    EXPECT_NEAR(std::abs(riemann_siegel_Z(30.0)), std::abs(zeta(cdouble(0.5, 30.0)).value), 1e-8);
    for (int i = 0; i < 1000; ++i) {
        const double t = 10.0 + 90.0 * i / 999.0;
        const cdouble z = zeta(cdouble(0.5, t)).value;
        EXPECT_NEAR(std::abs(riemann_siegel_Z(t)), std::abs(z), 1e-8);
    }
    // The rotation makes e^{i theta} zeta real, also on the log-Gamma branch below t = 10.
    for (double t : {0.5, 3.0, 7.5, 9.99, 10.0, 55.0, 777.0}) {
        const cdouble rotated = std::polar(1.0, riemann_siegel_theta(t)) * zeta(cdouble(0.5, t)).value;
        EXPECT_LT(std::abs(rotated.imag()), 1e-9) << t;
    }
}

TEST(RiemannSiegel, ThetaBranchesAgreeAtSwitch) {
    const double lg = special::log_gamma(cdouble(0.25, 5.0)).imag() - 5.0 * std::log(pi);
    EXPECT_NEAR(riemann_siegel_theta(10.0), lg, 1e-8);
}

TEST(RiemannSiegel, Continuity) { EXPECT_LT(std::abs(riemann_siegel_Z(25.0 + 1e-6) - riemann_siegel_Z(25.0)), 1e-3); }

TEST(FindZeros, FirstThree) {
    const auto zl = find_zeros(30.0);
    ASSERT_EQ(zl.ordinates.size(), 3u);
    EXPECT_NEAR(zl.ordinates[0], 14.134725141734694, 1e-4);
    EXPECT_NEAR(zl.ordinates[1], 21.022039638771555, 1e-4);
    EXPECT_NEAR(zl.ordinates[2], 25.010857580145689, 1e-4);
    // Bisection tolerance is far tighter than the stated 1e-4.
    EXPECT_NEAR(zl.ordinates[0], 14.134725141734694, 1e-8);
}

TEST(FindZeros, CountsMatchSmoothCount) {
    EXPECT_EQ(find_zeros(100.0).ordinates.size(), 29u);
    for (double t : {50.0, 100.0, 200.0}) {
        const auto n = static_cast<double>(find_zeros(t).ordinates.size());
        EXPECT_LE(std::abs(n - smooth_zero_count(t)), 2.0) << t;
    }
    EXPECT_TRUE(find_zeros(5.0).ordinates.empty());
}

TEST(FindZeros, ConjugateZerosAndOrdering) {
    const auto zl = find_zeros(200.0);
    EXPECT_TRUE(std::is_sorted(zl.ordinates.begin(), zl.ordinates.end()));
    EXPECT_EQ(std::adjacent_find(zl.ordinates.begin(), zl.ordinates.end()), zl.ordinates.end());
    for (double t : zl.ordinates) {
        EXPECT_LT(std::abs(zeta(cdouble(0.5, -t)).value), 1e-7) << t;
        EXPECT_LT(std::abs(zeta(cdouble(0.5, t)).value), 1e-7) << t;
    }
}

TEST(FindZeros, Preconditions) {
    EXPECT_THROW(find_zeros(2e4), DomainError);
    EXPECT_THROW(find_zeros(-1.0), DomainError);
    ZeroScanOptions coarse;
    coarse.grid = 0.5;
    EXPECT_THROW(find_zeros(30.0, coarse), DomainError);
}

TEST(FindZeros, ThreadedScanIsIdentical) {
    ZeroScanOptions opt;
    opt.threads = 3;
    EXPECT_EQ(find_zeros(150.0, opt).ordinates, find_zeros(150.0).ordinates);
}

TEST(Unfold, MeanSpacingAndMonotone) {
    const auto u = unfold(thousand_zeros());
    const double mean = (u.back() - u.front()) / static_cast<double>(u.size() - 1);
    EXPECT_GE(mean, 0.98);
    EXPECT_LE(mean, 1.02);
    for (std::size_t i = 1; i < u.size(); ++i) EXPECT_GT(u[i], u[i - 1]);
    const std::vector<double> one = {14.134725141734694};
    const auto single = unfold(one);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_DOUBLE_EQ(single[0], smooth_zero_count(one[0]));
    EXPECT_THROW(unfold(std::vector<double>{}), DomainError);
}

TEST(PairCorrelation, ReferenceCurve) {
    EXPECT_NEAR(gue_pair_density(1e-9), 0.0, 1e-15);
    EXPECT_NEAR(gue_pair_density(1e-3), 0.0, 1e-5);
    EXPECT_NEAR(gue_pair_density(1000.0), 1.0, 1e-6);
    EXPECT_NEAR(gue_pair_density(1.0), 1.0, 1e-15);
    EXPECT_NEAR(gue_pair_density(0.5), 1.0 - 4.0 / (pi * pi), 1e-15);
}

TEST(PairCorrelation, NormalizationAndErrors) {
    std::vector<double> lattice(200);
    for (std::size_t i = 0; i < lattice.size(); ++i) lattice[i] = static_cast<double>(i) * 0.7;
    const auto pc = pair_correlation(std::span<const double>(lattice), 3.0, 30);
    double integral = 0.0;
    for (double e : pc.empirical) integral += e * 0.1 * static_cast<double>(pc.point_count);
    EXPECT_NEAR(integral, static_cast<double>(pc.pair_count), 1e-9);
    // spacings 0.7, 1.4, 2.1, 2.8 -> 199 + 198 + 197 + 196 pairs
    EXPECT_EQ(pc.pair_count, 790u);
    EXPECT_THROW(pair_correlation(std::span<const double>(lattice.data(), 50), 3.0, 30), DomainError);
}

TEST(PairCorrelation, ZetaZerosFollowSineKernel) {
    const auto u = unfold(thousand_zeros());
    const auto pc = pair_correlation(std::span<const double>(u), 3.0, 40);
    EXPECT_LT(pc.ks_distance, 0.10);
    // Level repulsion: the first bin is nearly empty.
    EXPECT_LT(pc.empirical.front(), 0.1);
}

TEST(Gue, SemicircleSupportAndDeterminism) {
    std::mt19937_64 rng(99);
    const std::size_t dim = 200;
    const auto ev = gue_eigenvalues(dim, rng);
    ASSERT_EQ(ev.size(), dim);
    const double edge = 2.0 * std::sqrt(static_cast<double>(dim)) * 1.1;
    for (double l : ev) {
        EXPECT_TRUE(std::isfinite(l));
        EXPECT_LE(std::abs(l), edge);
    }
    EXPECT_EQ(gue_sample(40, 3, 1234), gue_sample(40, 3, 1234));
    EXPECT_NE(gue_sample(40, 3, 1234), gue_sample(40, 3, 1235));
    EXPECT_THROW(gue_sample(10, 1, 0), DomainError);
    EXPECT_THROW(gue_sample(40, 0, 0), DomainError);
}

TEST(Gue, BulkPairCorrelation) {
    const auto g = gue_sample(200, 50, 42);
    EXPECT_EQ(g.size(), 50u);
    const auto pc = pair_correlation(g, 3.0, 40);
    EXPECT_LT(pc.ks_distance, 0.08);
}

TEST(Spectral, FiniteSpectra) {
    std::vector<double> naturals(1000000);
    for (std::size_t i = 0; i < naturals.size(); ++i) naturals[i] = static_cast<double>(i + 1);
    EXPECT_NEAR(spectral_zeta(naturals, 2.0).real(), kZeta2, 1e-6);
    EXPECT_NEAR(spectral_zeta(std::vector<double>{2.0}, 1.0).real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(spectral_zeta(std::vector<double>{1.0}, cdouble(0.3, 7.0)) - 1.0), 0.0, 1e-15);
    EXPECT_THROW(spectral_zeta(std::vector<double>{1.0, 0.0}, 2.0), DomainError);
    EXPECT_THROW(spectral_zeta(std::vector<double>{-1.0}, 2.0), DomainError);
}

TEST(Spectral, MellinHeatTrace) {
    EXPECT_NEAR(heat_trace_mellin(std::vector<double>{1.0}, 2.0), 1.0, 1e-10);
    EXPECT_NEAR(heat_trace_mellin(std::vector<double>{3.0}, 1.0), 1.0 / 3.0, 1e-10);
    const std::vector<double> lam = {1.0, 2.0, 4.0};
    EXPECT_NEAR(heat_trace_mellin(lam, 1.5), spectral_zeta(lam, 1.5).real(), 1e-8);
    for (double s : {0.3, 0.8, 2.5, 7.0}) {
        const std::vector<double> spec = {0.5, 1.7, 3.3, 10.0, 42.0};
        const double z = spectral_zeta(spec, s).real();
        EXPECT_NEAR(heat_trace_mellin(spec, s) / z, 1.0, 1e-8) << s;
    }
    EXPECT_THROW(heat_trace_mellin(lam, 0.0), DomainError);
    EXPECT_THROW(heat_trace_mellin(std::vector<double>{0.0}, 1.0), DomainError);
}

TEST(Universality, OriginIsBagchiWitness) {
    ScanOptions opt;
    opt.include_origin = true;
    const auto rep = bagchi_scan({0.75, 0.05}, 0.3, 10.0, 0.5, opt);
    ASSERT_FALSE(rep.witnesses.empty());
    EXPECT_EQ(rep.witnesses.front(), 0.0);
    EXPECT_EQ(rep.samples.front().sup_error, 0.0);
    EXPECT_EQ(rep.samples.size(), 20u);
}

TEST(Universality, LargeEpsilonHitsEverywhere) {
    const auto rep = bagchi_scan({0.75, 0.1}, 10.0, 50.0, 0.5);
    EXPECT_DOUBLE_EQ(rep.hit_measure, 1.0);
    EXPECT_EQ(rep.witnesses.size(), 100u);
}

TEST(Universality, MeasureInvariantAndTargetMode) {
    const Disc d{{0.7, 0.0}, 0.1};
    auto target = [](cdouble s) { return zeta(s).value; };
    const auto rep = universality_scan(d, target, 1.0, 100.0, 0.25);
    std::size_t hits = 0;
    for (const auto& s : rep.samples) hits += s.hit ? 1 : 0;
    EXPECT_DOUBLE_EQ(rep.hit_measure, static_cast<double>(hits) * 0.25 / 100.0);
    EXPECT_EQ(rep.witnesses.size(), hits);
    // Shifted evaluator agrees with direct evaluation.
    const auto pts = disc_samples(d);
    EXPECT_EQ(pts.size(), 32u);
    const double t = rep.samples[37].t;
    double sup = 0.0;
    for (const auto& p : pts) sup = std::max(sup, std::abs(zeta(p + cdouble(0.0, t)).value - zeta(p).value));
    EXPECT_NEAR(rep.samples[37].sup_error, sup, 1e-10);
}

TEST(Universality, RegionMustStayInStrip) {
    EXPECT_THROW(bagchi_scan({0.55, 0.1}, 0.3, 10.0, 0.5), DomainError);
    EXPECT_THROW(bagchi_scan({0.95, 0.1}, 0.3, 10.0, 0.5), DomainError);
    EXPECT_THROW(bagchi_scan({0.4, 0.01}, 0.3, 10.0, 0.5), DomainError);
}

TEST(Universality, ThreadedScanIsIdentical) {
    ScanOptions opt;
    opt.threads = 4;
    const auto a = bagchi_scan({0.75, 0.05}, 2.0, 200.0, 0.5);
    const auto b = bagchi_scan({0.75, 0.05}, 2.0, 200.0, 0.5, opt);
    EXPECT_EQ(a.witnesses, b.witnesses);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].sup_error, b.samples[i].sup_error);
}

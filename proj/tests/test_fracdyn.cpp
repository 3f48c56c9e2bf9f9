#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tzlab/core/numeric.hpp"
#include "tzlab/fracdyn.hpp"

using namespace tzlab;
using namespace tzlab::fracdyn;
using std::numbers::pi;

namespace {

std::vector<std::complex<double>> canonical_arc(double alpha, std::size_t n, double lo = -4.0, double hi = 4.0) {
    const ColeColeModel m(alpha, 1.0);
    const auto omegas = logspace(lo, hi, n);
    return cole_cole_impedance(m, omegas);
}

}  // namespace

TEST(ColeCole, DebyeAtUnitFrequency) {
    const auto z = cole_cole_impedance(ColeColeModel(1.0, 1.0), 1.0);
    EXPECT_NEAR(z.real(), 0.5, 1e-15);
    EXPECT_NEAR(z.imag(), -0.5, 1e-15);
}

TEST(ColeCole, DcLimitIsSeriesPlusTransfer) {
    const ColeColeModel m(0.63, 2e-3, 47.0, 3.5);
    const auto z = cole_cole_impedance(m, 0.0);
    EXPECT_DOUBLE_EQ(z.real(), 50.5);
    EXPECT_DOUBLE_EQ(z.imag(), 0.0);
}

TEST(ColeCole, HalfOrderAtUnitFrequency) {
    // 1 / (1 + e^{i pi/4})
    const auto z = cole_cole_impedance(ColeColeModel(0.5, 1.0), 1.0);
    EXPECT_NEAR(z.real(), 0.5, 1e-12);
    EXPECT_NEAR(z.imag(), -0.20710678118654752, 1e-12);
}

TEST(ColeCole, RejectsBadInput) {
    EXPECT_THROW(ColeColeModel(0.0, 1.0), DomainError);
    EXPECT_THROW(ColeColeModel(1.2, 1.0), DomainError);
    EXPECT_THROW(ColeColeModel(0.5, -1.0), DomainError);
    EXPECT_THROW(ColeColeModel(0.5, 1.0, 0.0), DomainError);
    EXPECT_THROW(ColeColeModel(0.5, 1.0, 1.0, -0.1), DomainError);
    EXPECT_THROW(ColeColeModel(std::nan(""), 1.0), DomainError);
    const ColeColeModel m(0.5, 1.0);
    EXPECT_THROW(cole_cole_impedance(m, -1.0), DomainError);
    EXPECT_THROW(cole_cole_impedance(m, INFINITY), DomainError);
}

TEST(ColeCole, PrincipalBranchPhase) {
    for (double alpha : {0.1, 0.37, 0.5, 0.8, 1.0}) {
        for (double w : logspace(-6, 6, 37)) {
            EXPECT_NEAR(std::arg(fractional_operator(alpha, w)), alpha * pi / 2.0, 1e-12);
        }
    }
}

TEST(ColeCole, HighFrequencyAsymptote) {
    // The approach is ~ 1/(omega tau)^alpha, so 1e-3 at 1e6 holds on the critical band.
    for (double alpha : {0.5, 0.7, 0.9, 1.0}) {
        const ColeColeModel m(alpha, 1.0, 10.0, 2.0);
        const auto z = cole_cole_impedance(m, 1e6) - m.r_s();
        EXPECT_NEAR(std::arg(z), -alpha * pi / 2.0, 1e-3) << alpha;
    }
}

TEST(ArcFit, DebyeSemicircle) {
    const ColeColeModel m(1.0, 1.0, 20.0, 3.0);
    const auto pts = cole_cole_impedance(m, logspace(-3, 3, 50));
    const auto fit = arc_fit(pts);
    EXPECT_NEAR(fit.center.real(), 13.0, 1e-9);
    EXPECT_NEAR(fit.center.imag(), 0.0, 1e-9);
    EXPECT_NEAR(fit.radius, 10.0, 1e-9);
    EXPECT_NEAR(fit.depression_angle, 0.0, 1e-9);
    EXPECT_LT(fit.rms_residual, 1e-9);
}

TEST(ArcFit, DepressionMatchesArcGeometry) {
    // Closed-form arc: centre 1/2 + (i/2) tan((1-alpha) pi/2), radius 1/(2 sin(alpha pi/2)).
    for (double alpha : {0.5, 0.8, 0.95}) {
        const auto fit = arc_fit(canonical_arc(alpha, 200));
        EXPECT_NEAR(fit.depression_angle, (1.0 - alpha) * pi / 2.0, 1e-6);
        EXPECT_NEAR(fit.center.real(), 0.5, 1e-9);
        EXPECT_NEAR(fit.center.imag(), 0.5 * std::tan((1.0 - alpha) * pi / 2.0), 1e-9);
        EXPECT_NEAR(fit.radius, 0.5 / std::sin(alpha * pi / 2.0), 1e-9);
    }
}

TEST(ArcFit, ThreePointsOnUnitCircle) {
    const std::vector<std::complex<double>> pts = {{1, 0}, {0, 1}, {-1, 0}};
    const auto fit = arc_fit(pts);
    EXPECT_NEAR(fit.radius, 1.0, 1e-14);
    EXPECT_NEAR(std::abs(fit.center), 0.0, 1e-14);
    EXPECT_NEAR(fit.rms_residual, 0.0, 1e-14);
}

TEST(ArcFit, DegenerateInputs) {
    const std::vector<std::complex<double>> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    EXPECT_THROW(arc_fit(line), DegenerateError);
    const std::vector<std::complex<double>> two = {{0, 0}, {1, 1}};
    EXPECT_THROW(arc_fit(two), DegenerateError);
    const std::vector<std::complex<double>> same = {{1, 1}, {1, 1}, {1, 1}};
    EXPECT_THROW(arc_fit(same), DegenerateError);
}

TEST(ArcFit, ArcLawAcrossAlpha) {
    for (int i = 1; i <= 20; ++i) {
        const double alpha = 0.05 * i;
        const auto fit = arc_fit(canonical_arc(alpha, 200));
        EXPECT_LT(fit.rms_residual, 1e-9) << alpha;
        EXPECT_NEAR(fit.depression_angle, (1.0 - alpha) * pi / 2.0, 1e-6) << alpha;
    }
}

TEST(Phase, CriticalBandEndpoints) {
    const auto half = phase_angles(0.5);
    EXPECT_NEAR(half.phi, pi / 4.0, 1e-15);
    EXPECT_EQ(half.delta, 0.0);
    const auto one = phase_angles(1.0);
    EXPECT_EQ(one.phi, 0.0);
    EXPECT_NEAR(one.delta, pi / 4.0, 1e-15);
    const auto p = phase_angles(0.8);
    EXPECT_NEAR(p.phi, 0.31415926535897931, 1e-12);
    EXPECT_NEAR(p.delta, 0.47123889803846897, 1e-12);
}

TEST(Phase, BudgetOnFineGrid) {
    for (int i = 0; i < 1000; ++i) {
        const double alpha = 0.5 + 0.5 * i / 999.0;
        const auto p = phase_angles(alpha);
        EXPECT_NEAR(std::abs(p.delta) + std::abs(p.phi), pi / 4.0, 1e-12);
        EXPECT_GE(p.delta, 0.0);
    }
}

TEST(Phase, OutsideCriticalBand) {
    EXPECT_THROW(phase_angles(0.49), DomainError);
    EXPECT_THROW(phase_angles(1.01), DomainError);
}

TEST(TwistedShift, CommutatorPhaseIsTwiceDelta) {
    const double delta = phase_angles(0.8).delta;
    const auto u = TwistedShift::generator_u();
    const auto v = TwistedShift::generator_v();
    const auto ph = commutator_phase(u, v, delta);
    EXPECT_NEAR(ph.radians(), 0.9424777960769379, 1e-15);
    const auto rot = std::polar(1.0, ph.radians());
    EXPECT_NEAR(std::abs(rot - std::exp(std::complex<double>(0.0, 2.0 * delta))), 0.0, 1e-15);
    EXPECT_EQ(commutator_phase(v, u, delta), Phase{} - ph);
}

TEST(TwistedShift, IdentityAndAssociativity) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> steps(-50, 50);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    const double delta = phase_angles(0.73).delta;
    auto draw = [&] { return TwistedShift{steps(rng), steps(rng), Phase::from_radians(angle(rng))}; };
    for (int i = 0; i < 1000; ++i) {
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        EXPECT_EQ(twisted_compose(a, TwistedShift::identity(), delta), a);
        EXPECT_EQ(twisted_compose(TwistedShift::identity(), a, delta), a);
        EXPECT_EQ(twisted_compose(twisted_compose(a, b, delta), c, delta),
                  twisted_compose(a, twisted_compose(b, c, delta), delta));
    }
}

TEST(TwistedShift, ZeroDeltaIsAbelian) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> steps(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        const TwistedShift a{steps(rng), steps(rng), Phase::from_radians(0.1 * i)};
        const TwistedShift b{steps(rng), steps(rng), Phase::from_radians(-0.3 * i)};
        EXPECT_EQ(twisted_compose(a, b, 0.0), twisted_compose(b, a, 0.0));
    }
}

TEST(TwistedShift, WeylPhaseForPowers) {
    // U^b V^a = V^a U^b e^{2 i delta a b}
    const double delta = 0.3;
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            const TwistedShift ub{0, b, {}};
            const TwistedShift va{a, 0, {}};
            EXPECT_EQ(commutator_phase(ub, va, delta), Phase::from_radians(2.0 * delta).times(a * b));
        }
    }
}

TEST(MittagLeffler, ElementaryIdentities) {
    EXPECT_NEAR(mittag_leffler(1.0, -1.0), std::exp(-1.0), 1e-15);
    EXPECT_EQ(mittag_leffler(0.37, 0.0), 1.0);
    EXPECT_NEAR(mittag_leffler(2.0, -1.0), std::cos(1.0), 1e-14);
    EXPECT_NEAR(mittag_leffler(2.0, -25.0), std::cos(5.0), 1e-9);
    EXPECT_NEAR(mittag_leffler(0.5, -1.0), 0.42758357615580700, 1e-14);
}

TEST(MittagLeffler, HalfOrderErfcIdentityLargeArgument) {
    // E_{1/2}(-x) = exp(x^2) erfc(x)
    for (double x : {2.0, 5.0, 10.0, 20.0}) {
        const double expect = std::exp(x * x) * std::erfc(x);
        EXPECT_NEAR(mittag_leffler(0.5, -x) / expect, 1.0, 1e-8) << x;
    }
}

TEST(MittagLeffler, FrozenHighPrecisionValues) {
    // 80-digit power-series evaluations.
    struct Case {
        double alpha;
        std::complex<double> z;
        std::complex<double> expect;
    };
    const Case cases[] = {
        {0.9, -20.0, 0.0057495078161091126},
        {0.3, -3.0, 0.21180263319643578},
        {0.7, -2.5, 0.16863128667619575},
        {1.5, -3.0, -0.17556537379997824},
        {0.5, {2.0, 3.0}, {-0.08133907992862736, 0.12108616246299845}},
        {0.8, -50.0, 0.0044677761579029923},
        {0.6, -8.0, 0.058609742636332041},
        {1.5, -30.0, -0.014470224834105875},
        {0.95, -12.0, 0.0051537977632854272},
        {0.5, -10.0, 0.056140992743822586},
    };
    for (const auto& c : cases) {
        const auto v = mittag_leffler(c.alpha, c.z);
        EXPECT_LT(std::abs(v - c.expect), 1e-8 * std::abs(c.expect)) << c.alpha << " " << c.z;
    }
}

TEST(MittagLeffler, DomainAndRegimeErrors) {
    EXPECT_THROW(mittag_leffler(0.0, -1.0), DomainError);
    EXPECT_THROW(mittag_leffler(2.5, -1.0), DomainError);
    EXPECT_THROW(mittag_leffler(0.5, std::nan("")), DomainError);
}

TEST(Relaxation, KnownValues) {
    const std::vector<double> t = {0.0, 1.0};
    const auto debye = relaxation_response(ColeColeModel(1.0, 1.0), t);
    EXPECT_EQ(debye[0], 1.0);
    EXPECT_NEAR(debye[1], std::exp(-1.0), 1e-15);
    const auto half = relaxation_response(ColeColeModel(0.5, 1.0), t);
    EXPECT_EQ(half[0], 1.0);
    EXPECT_NEAR(half[1], std::exp(1.0) * std::erfc(1.0), 1e-12);
    EXPECT_THROW(relaxation_response(ColeColeModel(0.5, 1.0), std::vector<double>{}), DomainError);
    EXPECT_THROW(relaxation_response(ColeColeModel(0.5, 1.0), std::vector<double>{-1.0}), DomainError);
}

TEST(Relaxation, MonotoneDecayForFractionalOrders) {
    const auto t = logspace(-3, 3, 61);
    for (double alpha : {0.3, 0.6, 0.9}) {
        const auto u = relaxation_response(ColeColeModel(alpha, 1.0), t);
        for (std::size_t i = 1; i < u.size(); ++i) EXPECT_LT(u[i], u[i - 1]);
    }
}

TEST(Relaxation, TauberianConsistencyDebye) {
    // F(w) = 1 - i w int_0^inf U(t) e^{-i w t} dt should reproduce 1/(1 + i w tau).
    const double tau = 1.0;
    const double dt = 1e-3;
    const std::size_t n = 50000;
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = dt * static_cast<double>(k);
    const auto u = relaxation_response(ColeColeModel(1.0, tau), t);
    const ColeColeModel canonical(1.0, tau);
    for (double w : logspace(-2, 1, 13)) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double wt = (k == 0 || k == n - 1) ? 0.5 : 1.0;
            acc += wt * u[k] * std::exp(std::complex<double>(0.0, -w * t[k]));
        }
        const auto f = 1.0 - std::complex<double>(0.0, w) * acc * dt;
        const auto z = cole_cole_impedance(canonical, w);
        EXPECT_LT(std::abs(f - z) / std::abs(z), 0.01) << w;
    }
}

TEST(GrunwaldLetnikov, FirstOrderOfLinear) {
    const double h = 1e-3;
    std::vector<double> f(1001);
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = h * static_cast<double>(k);
    const auto d = gl_fracderiv(f, 1.0, h);
    for (std::size_t k = 1; k < d.size(); ++k) EXPECT_NEAR(d[k], 1.0, 1e-9);
}

TEST(GrunwaldLetnikov, HalfDerivativeClosedForms) {
    const double h = 1e-3;
    std::vector<double> lin(1001), one(1001, 1.0);
    for (std::size_t k = 0; k < lin.size(); ++k) lin[k] = h * static_cast<double>(k);
    const auto d_lin = gl_fracderiv(lin, 0.5, h);
    const auto d_one = gl_fracderiv(one, 0.5, h);
    EXPECT_NEAR(d_lin.back(), 2.0 / std::sqrt(pi), 5e-3);
    EXPECT_NEAR(d_one.back(), 1.0 / std::sqrt(pi), 5e-3);
}

TEST(GrunwaldLetnikov, ConvergesAtFirstOrder) {
    auto err_at = [](double h) {
        const auto n = static_cast<std::size_t>(std::lround(1.0 / h)) + 1;
        std::vector<double> f(n);
        for (std::size_t k = 0; k < n; ++k) f[k] = h * static_cast<double>(k);
        return std::abs(gl_fracderiv(f, 0.5, h).back() - 2.0 / std::sqrt(pi));
    };
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        const double ratio = err_at(h) / err_at(h / 2.0);
        EXPECT_GE(ratio, 1.8);
        EXPECT_LE(ratio, 2.2);
    }
}

TEST(GrunwaldLetnikov, Rejections) {
    EXPECT_THROW(gl_fracderiv(std::vector<double>{1.0}, 0.5, 0.1), DomainError);
    EXPECT_THROW(gl_fracderiv(std::vector<double>{1.0, 2.0}, 0.5, 0.0), DomainError);
    EXPECT_THROW(gl_fracderiv(std::vector<double>{1.0, 2.0}, 1.5, 0.1), DomainError);
}

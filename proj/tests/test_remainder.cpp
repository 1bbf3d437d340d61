#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include "zr/digamma.hpp"
#include "zr/errors.hpp"
#include "zr/golden.hpp"
#include "zr/remainder.hpp"

using namespace zr;

namespace {

struct Fixture {
    SmoothingKernel k{Theta{kDefaultTheta}};
    TrigPolynomial poly = trig_poly_default();
    RegionParams p = RegionParams::make(k, kRosserR, 5.97484);
};

const Fixture& fx() {
    static const Fixture f;
    return f;
}

const RemainderBreakdown& step_one() {
    static const RemainderBreakdown b = remainder_breakdown(fx().k, fx().p, fx().poly);
    return b;
}

}  // namespace

TEST(Remainder, UnshiftedGammaTermAgainstBoost) {
    const auto& p = fx().p;
    const double want = -(1 - p.kappa) / 2 * std::log(std::numbers::pi) + 0.5 * boost::math::digamma(1.5) -
                        p.kappa / 2 * boost::math::digamma((p.sigma0 + p.delta) / 2 + 1);
    EXPECT_NEAR(c1_k(0, p), want, 1e-11);
    EXPECT_THROW(c1_k(5, p), InvalidArgument);
}

TEST(Remainder, ShiftedGammaTerms) {
    const auto& p = fx().p;
    for (int k = 1; k <= 4; ++k) {
        const DigammaBoundParams b{p.sigma0 + 2, 3.0, k * p.T0, p.kappa, p.delta};
        const double want = -(1 - p.kappa) / 2 * std::log(2 * std::numbers::pi / k) +
                            0.5 * std::min(r2_bound(b), r3_bound(b));
        EXPECT_NEAR(c1_k(k, p), want, 1e-14);
    }
}

TEST(Remainder, FirstCoefficient) {
    EXPECT_NEAR(step_one().C1, golden::kC1, 1e-3);
    EXPECT_NEAR(C1_coefficient(fx().k, fx().p, fx().poly), step_one().C1, 1e-9);
}

TEST(Remainder, SecondCoefficients) {
    const auto& q = step_one().q;
    EXPECT_NEAR(q.q1, golden::kQ1.value, golden::kQ1.tol);
    EXPECT_NEAR(q.q2, golden::kQ2.value, golden::kQ2.tol);
    EXPECT_NEAR(q.q3, golden::kQ3.value, golden::kQ3.tol);
}

TEST(Remainder, LinearThirdCoefficient) {
    EXPECT_NEAR(step_one().p.p1, golden::kP1.value, golden::kP1.tol);
}

TEST(Remainder, ZeroSumIsWeightedC30) {
    const auto& [k, poly, p] = fx();
    double want = poly.a[0] * sum_inverse_gamma_sq_at_zero(backlund_original());
    for (int j = 1; j <= 4; ++j) want += poly.a[j] * c30(j * p.T0);
    EXPECT_NEAR(step_one().zero_sum, want, 1e-9);
}

TEST(Remainder, ThirdCoefficientsFollowZeroSum) {
    const auto& [k, poly, p] = fx();
    const auto doubled = C3_coefficients(k, p, poly, 2 * step_one().zero_sum);
    EXPECT_NEAR(doubled.p2, 2 * step_one().p.p2, 1e-6);
    EXPECT_EQ(doubled.p1, step_one().p.p1);
}

TEST(Remainder, ConvolutionAgainstTanhSinh) {
    const double m = fx().k.m;
    boost::math::quadrature::tanh_sinh<double> ts;
    // corner of |log(T/2) - 2/(1+4T^2)|, located independently
    std::uintmax_t iters = 100;
    const auto bracket = boost::math::tools::toms748_solve(
        [](double a) { return std::log(a / 2) - 2 / (1 + 4 * a * a); }, 2.0, 3.0,
        boost::math::tools::eps_tolerance<double>(52), iters);
    const double corner = 0.5 * (bracket.first + bracket.second);
    EXPECT_NEAR(U0_corner(), corner, 1e-14);
    for (double x : {0.4955, 1.116}) {
        for (double y : {0.0, 100.0, 1e5}) {
            // T = y + x tan(phi) turns dT / (x^2 + (T - y)^2) into dphi / x
            auto g = [&](double phi) { return U0(y + x * std::tan(phi)); };
            const double half = std::numbers::pi / 2;
            // split where U0 jumps (|T| = 1/2) or has a corner
            std::vector<double> cuts{-half, half};
            for (double c : {-corner, -0.5, 0.5, corner}) cuts.push_back(std::atan((c - y) / x));
            std::sort(cuts.begin(), cuts.end());
            double integral = 0;
            for (std::size_t i = 1; i < cuts.size(); ++i)
                if (cuts[i] > cuts[i - 1]) integral += ts.integrate(g, cuts[i - 1], cuts[i]);
            const double scale = m / (2 * std::numbers::pi * x);
            const double oracle = scale * integral / x;
            const double ours = C40_over_eta3(m, x, y);
            // ours adds a tail bound, so it may only undershoot by its quadrature tolerance
            EXPECT_GE(ours, oracle - scale * 1e-9 - 1e-12 * oracle) << x << ' ' << y;
            EXPECT_NEAR(ours, oracle, 1e-7 * oracle) << x << ' ' << y;
        }
    }
}

TEST(Remainder, ConvolutionRejectsNonpositiveAbscissa) {
    EXPECT_THROW(C40_over_eta3(1.0, 0.0, 1.0), InvalidArgument);
}

TEST(Remainder, C42Forms) {
    const auto& [k, poly, p] = fx();
    const double s = p.sigma0, sd = p.sigma0 + p.delta;
    EXPECT_NEAR(C42_over_eta3(k, p, 0), (1 / (s * s * s) + p.kappa / (sd * sd * sd)) * k.m, 1e-9);
    EXPECT_NEAR(C42_over_eta3(k, p, 2), (1 / s + p.kappa / sd) * k.m / (4 * p.T0 * p.T0), 1e-25);
}

TEST(Remainder, FourthCoefficientBelowPrintedBound) {
    const double c4 = step_one().C4;
    EXPECT_LE(c4, golden::kC4Bound);
    EXPECT_GE(c4, 0.98 * golden::kC4Bound);
}

TEST(Remainder, LowHeightVariantIsSmaller) {
    const auto& [k, poly, p] = fx();
    RemainderOptions low;
    low.c40_height = C40Height::at_t1;
    EXPECT_LT(C4_bound(k, p, poly, low), step_one().C4);
}

TEST(Remainder, CubicAssembly) {
    const auto& b = step_one();
    EXPECT_NEAR(b.cubic.alpha1, b.C1 + b.q.q1 + b.p.p1, 1e-9);
    EXPECT_NEAR(b.cubic.alpha2, b.q.q2 + b.p.p2, 1e-9);
    EXPECT_NEAR(b.cubic.alpha3, b.q.q3 + b.p.p3 + b.C4, 1e-6);
    const double e = fx().p.eta0;
    EXPECT_NEAR(b.cubic.value_at_eta0, b.cubic.alpha1 * e + b.cubic.alpha2 * e * e + b.cubic.alpha3 * e * e * e,
                1e-12);
    EXPECT_NEAR(b.cubic.alpha1, -3915.260, 0.05);
}

TEST(Remainder, CertificateAtStepOne) {
    const auto& [k, poly, p] = fx();
    const auto c = assemble_C(k, p, poly);
    EXPECT_LT(c.alpha1, 0);
    EXPECT_GT(c.alpha2, 0);
    EXPECT_GT(c.alpha3, 0);
    EXPECT_LT(c.value_at_eta0, 0);
    for (int i = 1; i <= 100; ++i) EXPECT_LE(c(p.eta0 * i / 100), 0.0);
}

TEST(Remainder, CertificateFailsForLargeEta) {
    // eta0 = 0.02 lies beyond the positive root of the cubic
    const auto& [k, poly, p] = fx();
    auto q = RegionParams::make(k, kRosserR, 5.0);
    q.eta0 = 0.02;
    EXPECT_THROW(assemble_C(k, q, poly), CertificateFailure);
}

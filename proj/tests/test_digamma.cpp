#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <boost/math/special_functions/digamma.hpp>
#include <gtest/gtest.h>

#include "zr/digamma.hpp"
#include "zr/errors.hpp"

using namespace zr;

namespace {

// psi(z) by upward recurrence to |z| > 20 and the Stirling series.
std::complex<double> digamma_oracle(std::complex<double> z) {
    std::complex<double> shift = 0.0;
    while (std::abs(z) < 20.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const auto w2 = 1.0 / (z * z);
    // B_{2k} / (2k) for k = 1..6
    const double c[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760};
    std::complex<double> series = 0.0, p = w2;
    for (double ck : c) {
        series += ck * p;
        p *= w2;
    }
    return shift + std::log(z) - 0.5 / z - series;
}

}  // namespace

TEST(Digamma, RealAxisAgainstBoost) {
    for (double x : {0.5, 1.0, 2.0, 3.0, 3.7, 10.0, 55.5}) {
        const double want = boost::math::digamma(x / 2);
        EXPECT_NEAR(re_digamma(x, 0.0), want, 1e-11 * std::max(1.0, std::abs(want))) << x;
    }
}

TEST(Digamma, OracleSelfCheck) {
    EXPECT_NEAR(digamma_oracle({0.25, 0.0}).real(), boost::math::digamma(0.25), 1e-13);
    EXPECT_NEAR(digamma_oracle({1.5, 0.0}).real(), boost::math::digamma(1.5), 1e-13);
}

TEST(Digamma, ComplexAgainstOracle) {
    for (double x : {0.5, 1.0, 2.0, 2.9911, 3.6}) {
        for (double y : {0.3, 1.0, 7.0, 20.0, 100.0, 1e4, 3.3e9}) {
            const double want = digamma_oracle({x / 2, y / 2}).real();
            EXPECT_NEAR(re_digamma(x, y), want, 2e-11 * std::max(1.0, std::abs(want))) << x << ' ' << y;
        }
    }
}

TEST(Digamma, SymmetricInY) { EXPECT_EQ(re_digamma(1.3, 4.0), re_digamma(1.3, -4.0)); }

TEST(Digamma, RejectsNonpositiveRealPart) {
    EXPECT_THROW(re_digamma(0.0, 1.0), NonpositiveRealPart);
    EXPECT_THROW(re_digamma(-1.0, 1.0), NonpositiveRealPart);
}

TEST(Digamma, KappaDeltaDifference) {
    const double k = 0.4389, d = 0.6206;
    EXPECT_NEAR(psi_kappa_delta(2.5, 30.0, k, d), re_digamma(2.5, 30.0) - k * re_digamma(2.5 + d, 30.0), 1e-14);
}

TEST(Digamma, U0MajorizesOnGrid) {
    for (int i = 0; i <= 4000; ++i) {
        const double T = 0.025 * i;
        EXPECT_LE(std::abs(digamma_oracle({0.25, T / 2}).real()), U0(T) + 1e-12) << T;
    }
    for (double T : {1e3, 1e5, 1e7, 3.3e9}) EXPECT_LE(std::abs(re_digamma(0.5, T)), U0(T)) << T;
}

TEST(Digamma, U0SmallBranchIsExactMaximum) {
    // Re psi(1/4 + iy) grows with |y|, so the value at 0 bounds the whole branch
    EXPECT_NEAR(U0(0.0), -boost::math::digamma(0.25), 1e-14);
    EXPECT_EQ(U0(0.3), U0(0.0));
}

TEST(Digamma, PrintedFirstBranchFallsShortAtZero) {
    EXPECT_LT(U0_printed(0.0), std::abs(boost::math::digamma(0.25)));
    EXPECT_EQ(U0_printed(2.0), U0(2.0));
}

TEST(Digamma, LargeYBoundHoldsOnSamples) {
    const DigammaBoundParams p{1.0, 2.9911, 10.0, 0.4389, 0.6206};
    const double b = psi_diff_bound(p, YRegime::large_y);
    EXPECT_LE(b, r2_bound(p));
    EXPECT_LE(b, r3_bound(p));
    for (double x : {1.0, 1.5, 2.0, 2.5, 2.9911})
        for (double y : {10.0, 14.0, 30.0, 100.0, 1e3, 1e6, 6.6e9}) {
            const double lhs = psi_kappa_delta(x, y, p.kappa, p.delta) - (1 - p.kappa) * std::log(y / 2);
            EXPECT_LE(lhs, b) << x << ' ' << y;
        }
}

TEST(Digamma, SmallYBoundHoldsOnSamples) {
    const DigammaBoundParams p{1.0, 2.9911, 10.0, 0.4389, 0.6206};
    const double b = psi_diff_bound(p, YRegime::small_y);
    for (double x : {1.0, 2.0, 2.9911})
        for (double y : {0.0, 1.0, 5.0, 9.99}) EXPECT_LE(psi_kappa_delta(x, y, p.kappa, p.delta), b) << x << ' ' << y;
}

TEST(Digamma, BoundParamsValidated) {
    EXPECT_THROW(psi_diff_bound({2.0, 1.0, 10.0, 0.4, 0.6}, YRegime::large_y), InvalidArgument);
    EXPECT_THROW(psi_diff_bound({1.0, 2.0, 10.0, 0.9, 0.6}, YRegime::large_y), InvalidArgument);
}

TEST(Digamma, KnownRealValues) {
    EXPECT_NEAR(re_digamma(2.0, 0.0), -std::numbers::egamma, 1e-12);
    EXPECT_NEAR(re_digamma(3.0, 0.0), 2 - std::numbers::egamma - 2 * std::numbers::ln2, 1e-12);
}

TEST(Digamma, RecurrenceOnRealAxis) {
    for (double z : {0.5, 1.5, 2.5}) EXPECT_NEAR(re_digamma(2 * z + 2, 0.0), re_digamma(2 * z, 0.0) + 1 / z, 1e-11) << z;
}

TEST(Digamma, AsymptoticRemainderAtHundred) {
    const double T = 100;
    const double gap = std::abs(re_digamma(0.5, T) - std::log(T / 2));
    EXPECT_LE(gap, 2 / (1 + 4 * T * T) + 2 / (3 * T) + 1 / (8 * T * T));
}

TEST(Digamma, SawtoothIntegralBound) {
    // |Re(psi(z) - log z + 1/(2z))| <= arctan(b/a)/b for z = a + ib
    for (double a : {0.25, 0.5, 1.0, 2.0})
        for (double b : {0.1, 1.0, 10.0, 100.0}) {
            const std::complex<double> z(a, b);
            const double saw = re_digamma(2 * a, 2 * b) - (std::log(z) - 0.5 / z).real();
            EXPECT_LE(std::abs(saw), std::atan(b / a) / b) << a << ' ' << b;
        }
}

TEST(Digamma, U0BranchValues) {
    EXPECT_NEAR(U0_printed(0.0), 2 * std::numbers::ln2 + 2 - std::numbers::pi / 2, 1e-12);
    EXPECT_NEAR(U0_printed(0.0), 1.81550, 1e-5);
    EXPECT_NEAR(U0(1.0), std::abs(std::log(0.5) - 0.4) + 2.0 / 3 + 0.125, 1e-12);
    EXPECT_NEAR(U0(1.0), 1.88481, 1e-5);
    for (double T : {0.1, 0.4, 0.5, 1.0, 5.0, 50.0}) EXPECT_LE(std::abs(re_digamma(0.5, T)), U0(T)) << T;
}

TEST(Digamma, R3DirectFormula) {
    const double T0 = 3330657430.697, s0 = 0.99555, k = 0.4389, d = 0.62063;
    const DigammaBoundParams p{s0 + 2, 3.0, T0, k, d};
    const double want = (1 / (3 * T0)) * (1 / (s0 + 2) + k / (s0 + 2 + d)) + (9 + k * (3 + d) * (3 + d)) / (2 * T0 * T0);
    EXPECT_NEAR(r3_bound(p), want, 1e-22);
}

TEST(Digamma, KappaZeroCollapse) {
    const DigammaBoundParams p{1.0, 2.0, 50.0, 0.0, 0.6};
    EXPECT_NEAR(r2_bound(p), 0.5 * std::log((2.0 + 0.6) * (2.0 + 0.6) / 2500 + 1) + std::atan(50.0 / 2.0) / 50.0,
                1e-15);
}

TEST(Digamma, RandomLargeYSamples) {
    const DigammaBoundParams p{1.0, 2.9911, 50.0, 0.4389, 0.62063};
    const double b = psi_diff_bound(p, YRegime::large_y);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(p.x0, p.x1), uly(std::log(50.0), std::log(1e8));
    for (int i = 0; i < 100; ++i) {
        const double x = ux(rng), y = std::exp(uly(rng));
        EXPECT_LE(psi_kappa_delta(x, y, p.kappa, p.delta), (1 - p.kappa) * std::log(y / 2) + b) << x << ' ' << y;
    }
}

TEST(Digamma, U0RandomHeights) {
    std::mt19937_64 rng(500);
    std::uniform_real_distribution<double> uT(0.0, 100.0);
    for (int i = 0; i < 500; ++i) {
        const double T = uT(rng);
        EXPECT_LE(std::abs(re_digamma(0.5, T)), U0(T) + 1e-9) << T;
    }
}

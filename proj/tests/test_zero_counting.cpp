#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "zr/errors.hpp"
#include "zr/zero_counting.hpp"

using namespace zr;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double gk(auto f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
}

// int_a^b of f over [a, b], split geometrically away from the endpoint a.
double gk_geometric(auto f, double a, double b) {
    double s = 0, lo = a, step = 1;
    while (lo < b) {
        const double hi = std::min(b, lo + step);
        s += gk(f, lo, hi);
        lo = hi;
        step *= 2;
    }
    return s;
}

}  // namespace

TEST(ZeroCounting, MainTermFormula) {
    const double u = 1e6;
    EXPECT_NEAR(N_main(u), u / kTwoPi * std::log(u / (kTwoPi * std::numbers::e)), 1e-6);
    // N(100) = 29 lies between the two envelopes
    EXPECT_LE(N_bound(100.0, Side::lower), 29.0);
    EXPECT_GE(N_bound(100.0, Side::upper), 29.0);
    EXPECT_LE(N_bound(1e4, Side::lower, backlund_original()), 10142.0);
    EXPECT_GE(N_bound(1e4, Side::upper, backlund_original()), 10142.0);
}

TEST(ZeroCounting, BelowFirstZeroRejected) {
    EXPECT_THROW(N_bound(10.0, Side::upper), DomainBelowT1);
    EXPECT_THROW(c30(10.0), DomainTooSmall);
}

TEST(ZeroCounting, LinearEnvelopeDominatesOriginal) {
    const auto lin = BacklundBounds{}, orig = backlund_original();
    EXPECT_NEAR(lin.spread(kFirstZeroOrdinate), orig.spread(kFirstZeroOrdinate), 1e-3);
    for (double u : {20.0, 100.0, 1e4, 1e8, 3.3e9}) EXPECT_GE(lin.spread(u), orig.spread(u)) << u;
}

TEST(ZeroCounting, InverseSquareSumAtZero) {
    const double s = sum_inverse_gamma_sq_at_zero();
    EXPECT_LE(s, 0.098178);
    EXPECT_GE(s, 0.09);
    EXPECT_LE(sum_inverse_gamma_sq_at_zero_lower(), s);
}

TEST(ZeroCounting, InverseSquareSumAgainstIndependentQuadrature) {
    const auto b = backlund_original();
    // substitute u = t1 / w to map [t1, inf) onto (0, 1]
    auto f = [&](double w) {
        if (w <= 0) return 0.0;
        const double u = b.t1 / w;
        return 4 * N_bound(u, Side::upper, b) / (u * u * u) * b.t1 / (w * w);
    };
    EXPECT_NEAR(sum_inverse_gamma_sq_at_zero(), gk(f, 0.0, 1.0), 1e-10);
}

TEST(ZeroCounting, PairedFormMatchesSeparateTerms) {
    for (double t : {100.0, 1e4}) {
        const auto j = c30_terms(t);
        EXPECT_NEAR(c30(t), j.J1 - j.J2 + j.J3, 1e-8 * t) << t;
    }
}

TEST(ZeroCounting, StieltjesIdentityForSmoothCount) {
    // With N = main term exactly, c30 is the integral of
    // f(u) = 1/(u-t)^2 + 1/(u+t)^2 against dN over |u - t| >= 1, after
    // integration by parts. Undo the boundary terms and compare with the
    // direct integral of f N'.
    const BacklundBounds smooth{kFirstZeroOrdinate, 0.0, 0.0, 0.0};
    const double t = 1e6, t1 = smooth.t1;
    auto f = [&](double u) { return 1 / ((u - t) * (u - t)) + 1 / ((u + t) * (u + t)); };
    auto dN = [](double u) { return std::log(u / kTwoPi) / kTwoPi; };

    const double below = gk_geometric([&](double v) { return f(t - v) * dN(t - v); }, 1.0, t - t1);
    // upper range mapped to (0, 1] by u = t + 1/w
    const double above = gk([&](double w) {
        if (w <= 0) return 0.0;
        const double u = t + 1 / w;
        return f(u) * dN(u) / (w * w);
    }, 0.0, 1.0);
    const double direct = below + above;

    const double window = gk([&](double u) { return 2 * N_main(u) / std::pow(u + t, 3); }, t - 1, t + 1);
    const double ibp = c30(t, smooth) + f(t - 1) * N_main(t - 1) - f(t + 1) * N_main(t + 1) -
                       f(t1) * N_main(t1) - window;
    EXPECT_NEAR(ibp, direct, 1e-7);
}

TEST(ZeroCounting, C30AtShiftedHeights) {
    const double T0 = 3330657430.697;
    const double v1 = c30(T0), v2 = c30(2 * T0);
    EXPECT_NEAR(v1, 36.3911266270, 1e-6);
    EXPECT_NEAR(v2, 37.2481752321, 1e-6);
    EXPECT_GT(v2, v1);
}

TEST(ZeroCounting, C30Deterministic) {
    EXPECT_EQ(c30(5e9), c30(5e9));
}

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

using namespace zr;

TEST(PairwiseSum, MatchesExactSumOfIntegers) {
    std::vector<double> xs;
    for (int i = 1; i <= 1000; ++i) xs.push_back(i);
    EXPECT_EQ(pairwise_sum(xs), 500500.0);
    EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(PairwiseSum, BeatsNaiveOnTinyIncrements) {
    std::vector<double> xs(1 << 20, 0.1);
    const double exact = 0.1 * (1 << 20);
    double naive = 0;
    for (double x : xs) naive += x;
    EXPECT_LT(std::abs(pairwise_sum(xs) - exact), std::abs(naive - exact));
}

TEST(Integrate, ClosedForms) {
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-13).value, 2.0, 1e-13);
    EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0, 1, 1e-13).value, std::numbers::e - 1, 1e-13);
    // degree 29 is integrated exactly by a single 15-point Kronrod panel
    EXPECT_NEAR(integrate([](double x) { return std::pow(x, 29); }, 0, 1, 1e-14).value, 1.0 / 30, 1e-15);
}

TEST(Integrate, ErrorEstimateCoversTrueError) {
    auto f = [](double x) { return std::sqrt(x); };
    const auto r = integrate(f, 0, 1, 1e-10);
    EXPECT_LE(std::abs(r.value - 2.0 / 3), std::max(r.error_estimate, 1e-15));
    EXPECT_LE(r.error_estimate, 1e-10);
}

TEST(Integrate, BreakpointsAtAKink) {
    auto f = [](double x) { return std::abs(x - 0.3); };
    const std::vector<double> bp{0.0, 0.3, 1.0};
    EXPECT_NEAR(integrate(f, bp, 1e-14).value, 0.29, 1e-15);
}

TEST(Integrate, ReversedLimitsRejected) {
    auto f = [](double x) { return x * x; };
    EXPECT_THROW(integrate(f, 1, 0, 1e-14), InvalidArgument);
    const std::vector<double> bp{0.0, 0.5, 0.25};
    EXPECT_THROW(integrate(f, bp, 1e-14), InvalidArgument);
}

TEST(Integrate, SubdivisionLimitThrows) {
    auto f = [](double x) { return std::sin(1000 * x) * std::exp(x); };
    EXPECT_THROW(integrate(f, 0, 10, 1e-14, 3), SubdivisionLimit);
}

TEST(Integrate, NonFiniteIntegrandThrows) {
    auto f = [](double x) { return 1 / (x - 0.5) / 0.0; };
    EXPECT_THROW(integrate(f, 0, 1, 1e-10), InvalidArgument);
}

TEST(Integrate, BitIdenticalReruns) {
    auto f = [](double x) { return std::cos(40 * x) * std::exp(-x * x); };
    const auto a = integrate(f, -3, 3, 1e-12), b = integrate(f, -3, 3, 1e-12);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.value), std::bit_cast<std::uint64_t>(b.value));
}

TEST(GeometricPartition, DoublingSteps) {
    const auto bp = geometric_partition(1.0, 10.0);
    const std::vector<double> want{1, 2, 3, 5, 9, 10};
    EXPECT_EQ(bp, want);
}

TEST(IntegrateImproper, InverseSquare) {
    auto f = [](double x) { return 1 / (x * x); };
    auto tail = [](double T) { return 1 / T; };
    const auto r = integrate_improper_upper(f, 1.0, tail, 1e-10);
    EXPECT_NEAR(r.value, 1.0, 1e-10);
    EXPECT_GE(r.error_estimate, 0.0);
}

TEST(IntegrateImproper, DivergentTailThrows) {
    auto f = [](double x) { return 1 / x; };
    auto tail = [](double) { return std::numeric_limits<double>::infinity(); };
    EXPECT_THROW(integrate_improper_upper(f, 1.0, tail, 1e-10), TailDivergence);
}

TEST(FindRoot, SquareRootOfTwo) {
    const double r = find_root([](double x) { return x * x - 2; }, 0, 2, 1e-14);
    EXPECT_NEAR(r, std::numbers::sqrt2, 1e-14);
}

TEST(FindRoot, NoSignChangeThrows) {
    EXPECT_THROW(find_root([](double x) { return x * x + 1; }, -1, 1, 1e-10), NoSignChange);
}

TEST(MinimizeScalar, Parabola) {
    EXPECT_NEAR(minimize_scalar([](double x) { return (x - 1.25) * (x - 1.25); }, 0, 3, 1e-10), 1.25, 1e-9);
}

TEST(MinimizeScalar, InfinitePenaltyRegion) {
    auto f = [](double x) { return x > 2 ? std::numeric_limits<double>::infinity() : (x - 1.5) * (x - 1.5); };
    EXPECT_NEAR(minimize_scalar(f, 0, 3, 1e-10), 1.5, 1e-9);
}

TEST(ToleranceConfig, RejectsNonsense) {
    ToleranceConfig t;
    EXPECT_NO_THROW(t.validate());
    t.quad_abs_tol = -1;
    EXPECT_THROW(t.validate(), InvalidArgument);
    t = {};
    t.max_subdivisions = 0;
    EXPECT_THROW(t.validate(), InvalidArgument);
}

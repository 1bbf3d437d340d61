#include "zr/zero_counting.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

namespace {

constexpr double kTol = 1e-11;
constexpr double kTwoPi = 2 * std::numbers::pi;
const double kLogTwoPiE = std::log(kTwoPi) + 1.0;

// C with |N_{1,2}(u)| <= C u log u on [t1, inf).
double growth_constant(const BacklundBounds& b) {
    return 1 / kTwoPi +
           (std::abs(b.c_log) + std::abs(b.c_loglog) + std::abs(b.c_const) / std::log(b.t1)) / b.t1;
}

// main(t + v) - main(t - v), written without the O(t log t) cancellation.
double main_difference(double t, double v) {
    const double lp = std::log(t + v), lm = std::log(t - v);
    return (2 * t * std::atanh(v / t) + v * (lp + lm) - 2 * v * kLogTwoPiE) / kTwoPi;
}

double inverse_square_sum(const BacklundBounds& b, Side side) {
    const double c = growth_constant(b);
    auto f = [&](double u) { return 4 * N_bound(u, side, b) / (u * u * u); };
    auto tail = [&](double T) { return 4 * c * (std::log(T) + 1) / T; };
    return integrate_improper_upper(f, b.t1, tail, kTol, 100'000).value;
}

double j1(double t, const BacklundBounds& b) {
    const double c = growth_constant(b);
    auto f = [&](double u) { return 2 * N_bound(u, Side::upper, b) / std::pow(u + t, 3); };
    auto tail = [&](double T) { return 2 * c * (std::log(T) + 1) / T; };
    return integrate_improper_upper(f, b.t1, tail, kTol, 100'000).value;
}

// 2 int_a^inf N1(t + v)/v^3 dv for a > 0
double upper_side(double t, double a, const BacklundBounds& b, double tol = kTol) {
    const double c = growth_constant(b);
    auto f = [&](double v) { return 2 * N_bound(t + v, Side::upper, b) / (v * v * v); };
    auto tail = [&](double V) {
        if (V < t) return std::numeric_limits<double>::infinity();
        return 4 * c * (std::log(2 * V) + 1) / V;
    };
    return integrate_improper_upper(f, a, tail, tol, 100'000).value;
}

void check_domain(double t, const BacklundBounds& b) {
    if (!(t > b.t1 + 1)) throw DomainTooSmall("c30 needs t > t1 + 1");
}

}  // namespace

double BacklundBounds::spread(double u) const {
    return c_log * std::log(u) + c_loglog * std::log(std::log(u)) + c_const;
}

BacklundBounds backlund_original() { return {kFirstZeroOrdinate, 0.137, 0.443, 5.225}; }

double N_main(double u) { return u / kTwoPi * (std::log(u) - kLogTwoPiE); }

double N_bound(double u, Side side, const BacklundBounds& b) {
    if (!(u >= b.t1)) throw DomainBelowT1("N bound needs u >= t1");
    const double s = b.spread(u);
    return side == Side::upper ? N_main(u) + s : N_main(u) - s;
}

double sum_inverse_gamma_sq_at_zero(const BacklundBounds& b) {
    return inverse_square_sum(b, Side::upper);
}

double sum_inverse_gamma_sq_at_zero_lower(const BacklundBounds& b) {
    return inverse_square_sum(b, Side::lower);
}

double c30(double t, const BacklundBounds& b) {
    check_domain(t, b);
    const double near_end = t - b.t1;
    // -J2 + J3 over the distance v in [1, t - t1], paired
    auto paired = [&](double v) {
        const double lp = std::log(t + v), lm = std::log(t - v);
        const double spread = b.c_log * (lp + lm) +
                              b.c_loglog * (std::log(lp) + std::log(lm)) + 2 * b.c_const;
        return 2 * (main_difference(t, v) + spread) / (v * v * v);
    };
    const auto bp = geometric_partition(1.0, near_end);
    const double pair = integrate(paired, bp, kTol, 100'000).value;
    return j1(t, b) + pair + upper_side(t, near_end, b);
}

C30Terms c30_terms(double t, const BacklundBounds& b) {
    check_domain(t, b);
    auto lower = [&](double v) { return 2 * N_bound(t - v, Side::lower, b) / (v * v * v); };
    const auto bp = geometric_partition(1.0, t - b.t1);
    const double tol = kTol * std::max(1.0, t);
    return {j1(t, b), integrate(lower, bp, tol, 100'000).value, upper_side(t, 1.0, b, tol)};
}

}  // namespace zr

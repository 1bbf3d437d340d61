#include "zr/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zr/digamma.hpp"
#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

namespace {

constexpr double kPi = std::numbers::pi;

double shifted_inverse_squares(const RegionParams& p, const TrigPolynomial& poly) {
    double s = 0.0;
    for (int k = 1; k <= 4; ++k) s += poly.a[k] / ((k * p.T0) * (k * p.T0));
    return s;
}

}  // namespace

double c1_k(int k, const RegionParams& p) {
    if (k < 0 || k > 4) throw InvalidArgument("shift index must be in 0..4");
    const double kap = p.kappa;
    if (k == 0)
        return -(1 - kap) / 2 * std::log(kPi) + 0.5 * re_digamma(3.0, 0.0) -
               kap / 2 * re_digamma(p.sigma0 + p.delta + 2, 0.0);
    const DigammaBoundParams b{p.sigma0 + 2, 3.0, k * p.T0, kap, p.delta};
    return -(1 - kap) / 2 * std::log(2 * kPi / k) + 0.5 * psi_diff_bound(b, YRegime::large_y);
}

double C1_coefficient(const SmoothingKernel& ker, const RegionParams& p, const TrigPolynomial& poly) {
    double c = 0.0;
    for (int k = 0; k <= 4; ++k) c += poly.a[k] * c1_k(k, p);
    return c * ker.g1;
}

double weighted_c30_sum(const RegionParams& p, const TrigPolynomial& poly, const RemainderOptions& opt) {
    double s = poly.a[0] * sum_inverse_gamma_sq_at_zero(opt.zero_sum_envelope);
    for (int k = 1; k <= 4; ++k) s += poly.a[k] * c30(k * p.T0, opt.envelope);
    return s;
}

C2Coefficients C2_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly) {
    const double sk = shifted_inverse_squares(p, poly);
    const double kap = p.kappa, d = p.delta, a0 = poly.a[0];
    return {-kap * (a0 * ker.g1 / d + d * ker.g1 / 2 * sk), (ker.M(-1.0) + kap * ker.m) * sk,
            a0 * ker.m * kap / (d * d * d)};
}

C3Coefficients C3_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly, double zero_sum) {
    const double kap = p.kappa, d = p.delta, a1 = poly.a[1];
    // sigma - 1 + beta0 + delta >= sigma0 - eta0 + delta
    const double x = p.sigma0 - p.eta0 + d;
    return {a1 * ker.g1 * ((1 / d + 1 / x) * kap - 1), ker.M(0.0) / 2 * zero_sum,
            (1 + 2 * kap) * ker.m / (2 * p.sigma0 - 1) * zero_sum +
                a1 * ker.m * ((1 / (d * d * d) + 1 / (x * x * x)) * kap + 1)};
}

C3Coefficients C3_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly, const RemainderOptions& opt) {
    return C3_coefficients(ker, p, poly, weighted_c30_sum(p, poly, opt));
}

double C40_over_eta3(double m, double x, double y, double reach) {
    if (!(x > 0)) throw InvalidArgument("C40 needs x > 0");
    if (reach <= 0) reach = 1e9 * (1 + std::abs(y));
    std::vector<double> bp{y - reach, y, y + reach};
    for (double s = 1.0; s < reach; s *= 2) {
        bp.push_back(y - s);
        bp.push_back(y + s);
    }
    for (double c : {-U0_corner(), -0.5, 0.0, 0.5, U0_corner()})
        if (c > y - reach && c < y + reach) bp.push_back(c);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    auto f = [&](double T) { return U0(T) / (x * x + (T - y) * (T - y)); };
    const double body = integrate(f, bp, 1e-9, 100'000).value;
    // U0(T) <= log(|T| + 2) + 5.3 everywhere; with |T| <= |y| + s this
    // integrates against s^-2 over s >= reach, on both sides.
    const double L = std::log(std::abs(y) + 2 + reach) + 5.3;
    const double tail = 2 * (L + 1) / reach;
    return m / (2 * kPi * x) * (body + tail);
}

double C42_over_eta3(const SmoothingKernel& ker, const RegionParams& p, int k) {
    const double s = p.sigma0, sd = p.sigma0 + p.delta;
    if (k == 0) return (1 / (s * s * s) + p.kappa / (sd * sd * sd)) * ker.m;
    const double y = k * p.T0;
    return (1 / s + p.kappa / sd) * ker.m / (y * y);
}

double C4_bound(const SmoothingKernel& ker, const RegionParams& p, const TrigPolynomial& poly,
                const RemainderOptions& opt) {
    const double x = p.sigma0 - 0.5;
    const double step = opt.c40_height == C40Height::at_T0 ? p.T0 : kFirstZeroOrdinate;
    double total = 0.0;
    for (int k = 0; k <= 4; ++k) {
        const double y = k * step;
        const double c41 = C40_over_eta3(ker.m, x, y) + p.kappa * C40_over_eta3(ker.m, x + p.delta, y);
        total += poly.a[k] * (c41 + C42_over_eta3(ker, p, k));
    }
    return total;
}

RemainderBreakdown remainder_breakdown(const SmoothingKernel& ker, const RegionParams& p,
                                       const TrigPolynomial& poly, const RemainderOptions& opt) {
    RemainderBreakdown b;
    for (int k = 0; k <= 4; ++k) b.c1 += poly.a[k] * c1_k(k, p);
    b.C1 = b.c1 * ker.g1;
    b.q = C2_coefficients(ker, p, poly);
    b.zero_sum = weighted_c30_sum(p, poly, opt);
    b.p = C3_coefficients(ker, p, poly, b.zero_sum);
    b.C4 = C4_bound(ker, p, poly, opt);
    auto& c = b.cubic;
    c.alpha1 = b.C1 + b.q.q1 + b.p.p1;
    c.alpha2 = b.q.q2 + b.p.p2;
    c.alpha3 = b.q.q3 + b.p.p3 + b.C4;
    c.value_at_eta0 = c(p.eta0);
    return b;
}

RemainderCubic assemble_C(const SmoothingKernel& ker, const RegionParams& p,
                          const TrigPolynomial& poly, const RemainderOptions& opt) {
    const auto c = remainder_breakdown(ker, p, poly, opt).cubic;
    if (!(c.alpha1 < 0 && c.alpha2 > 0 && c.alpha3 > 0))
        throw CertificateFailure("sign pattern alpha1 < 0 < alpha2, alpha3 violated");
    if (!(c.value_at_eta0 < 0))
        throw CertificateFailure("C(eta0) = " + std::to_string(c.value_at_eta0) + " is not negative");
    return c;
}

}  // namespace zr

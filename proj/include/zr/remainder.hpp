#pragma once

#include "zr/kernel.hpp"
#include "zr/params.hpp"
#include "zr/trig_poly.hpp"
#include "zr/zero_counting.hpp"

namespace zr {

// Height at which the Gamma-factor convolution C40 is evaluated for the
// k-th shift. at_T0 uses y = k T0, where the bound is largest over the
// admissible range; at_t1 uses y = k t1.
enum class C40Height { at_T0, at_t1 };

struct RemainderOptions {
    BacklundBounds envelope{};                        // for c30 at k >= 1
    BacklundBounds zero_sum_envelope = backlund_original();  // for the k = 0 sum
    C40Height c40_height = C40Height::at_T0;
};

struct C2Coefficients {
    double q1, q2, q3;
};

struct C3Coefficients {
    double p1, p2, p3;
};

struct RemainderCubic {
    double alpha1 = 0, alpha2 = 0, alpha3 = 0;
    double value_at_eta0 = 0;

    double operator()(double eta) const { return ((alpha3 * eta + alpha2) * eta + alpha1) * eta; }
};

// Every intermediate, for reporting.
struct RemainderBreakdown {
    double c1 = 0;   // sum a_k c1(k)
    double C1 = 0;   // c1 g1
    C2Coefficients q{};
    C3Coefficients p{};
    double zero_sum = 0;  // sum a_k c30(k T0), k = 0 through the 1/gamma^2 sum
    double C4 = 0;
    RemainderCubic cubic{};
};

double c1_k(int k, const RegionParams& p);
double C1_coefficient(const SmoothingKernel& ker, const RegionParams& p, const TrigPolynomial& poly);

double weighted_c30_sum(const RegionParams& p, const TrigPolynomial& poly,
                        const RemainderOptions& opt = {});

C2Coefficients C2_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly);
C3Coefficients C3_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly, double zero_sum);
C3Coefficients C3_coefficients(const SmoothingKernel& ker, const RegionParams& p,
                               const TrigPolynomial& poly, const RemainderOptions& opt = {});

// (m / (2 pi x)) int U0(T) / (x^2 + (T - y)^2) dT, i.e. C40 / eta^3.
// The integral is taken over |T - y| <= reach and the rest is added as an
// analytic upper bound.
double C40_over_eta3(double m, double x, double y, double reach = 0);

double C42_over_eta3(const SmoothingKernel& ker, const RegionParams& p, int k);

// Coefficient of eta^3 in C4.
double C4_bound(const SmoothingKernel& ker, const RegionParams& p, const TrigPolynomial& poly,
                const RemainderOptions& opt = {});

RemainderBreakdown remainder_breakdown(const SmoothingKernel& ker, const RegionParams& p,
                                       const TrigPolynomial& poly,
                                       const RemainderOptions& opt = {});

// Throws CertificateFailure if C(eta0) >= 0 or the sign pattern
// alpha1 < 0 < alpha2, alpha3 fails.
RemainderCubic assemble_C(const SmoothingKernel& ker, const RegionParams& p,
                          const TrigPolynomial& poly, const RemainderOptions& opt = {});

}  // namespace zr

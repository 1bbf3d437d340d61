#pragma once

#include <optional>
#include <vector>

#include "zr/kernel.hpp"
#include "zr/numerics.hpp"
#include "zr/params.hpp"
#include "zr/remainder.hpp"
#include "zr/trig_poly.hpp"

namespace zr {

struct IterationRecord {
    int step = 0;
    double R_in = 0, r_in = 0;
    double eta0 = 0, kappa = 0, delta = 0;
    double alpha1 = 0, alpha2 = 0, alpha3 = 0;
    double C_at_eta0 = 0;
    double R0_out = 0;
};

struct ThetaRecord {
    int step = 0;
    double R_in = 0, r_in = 0;
    double theta = 0;
    double R0_out = 0;
};

struct StepOptions {
    double T0 = kT0;
    double t0 = 1.0;
    // Evaluate K at omega = r/R instead of r log T0 / (R log(4 T0 + t0)).
    bool omega_ratio = false;
    RemainderOptions remainder{};
    ToleranceConfig tol{};
};

// int_0^d1 (a1 e^{-t} - a0) h(t) e^{omega t} dt
double K_omega(const SmoothingKernel& k, double omega, const TrigPolynomial& poly,
               double tol = 1e-11);

// The final quotient (A/2) g1 (1 - kappa) / K(omega); no certificate.
double R0_value(const SmoothingKernel& k, const RegionParams& p, const TrigPolynomial& poly,
                const StepOptions& opt = {});

// Solve (delta, kappa), certify the remainder cubic, return the new constant.
IterationRecord R0_step(const SmoothingKernel& k, double R, double r, const TrigPolynomial& poly,
                        const StepOptions& opt = {});

// Largest r in [5, R] (to within 1e-7) with R0(r, R) >= r.
double fixed_point_r(const SmoothingKernel& k, double R, const TrigPolynomial& poly,
                     const StepOptions& opt = {});

// Replay an explicit schedule of r values, or (schedule empty) pick r at
// each step as the fixed point and stop when R0 moves by less than 1e-5.
std::vector<IterationRecord> iterate(double R_init, const std::vector<double>& r_schedule,
                                     const SmoothingKernel& k, const TrigPolynomial& poly,
                                     const StepOptions& opt = {}, int max_steps = 50);

struct ThetaOptimum {
    double theta;
    double R0;
};

inline constexpr double kThetaSearchLo = 1.5707963267948966 + 0.05;
inline constexpr double kThetaSearchHi = 3.141592653589793 - 0.05;

// Golden-section search over theta of R0(R, r, theta); every theta-dependent
// constant is rebuilt per candidate. The certificate is checked at the optimum.
ThetaOptimum optimize_theta(double R, double r, const TrigPolynomial& poly,
                            const StepOptions& opt = {}, double lo = kThetaSearchLo,
                            double hi = kThetaSearchHi);

// Theta iteration: explicit (R, r) pairs, or (empty) automatic with
// R <- R0 and r the fixed point at the previous optimal theta.
std::vector<ThetaRecord> iterate_theta(double R_init,
                                       const std::vector<std::pair<double, double>>& schedule,
                                       const TrigPolynomial& poly, const StepOptions& opt = {},
                                       int max_steps = 20);

}  // namespace zr

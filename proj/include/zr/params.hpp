#pragma once

#include "zr/kernel.hpp"
#include "zr/positivity.hpp"

namespace zr {

// Height up to which all zeros are known to lie on the critical line.
inline constexpr double kT0 = 3330657430.697;
inline constexpr double kRosserR = 9.645908801;

struct RegionParams {
    double T0 = kT0;
    double t0 = 1.0;
    double R = 0;
    double r = 0;
    Theta theta{kDefaultTheta};
    double eta0 = 0;
    double sigma0 = 0;
    double kappa = 0;
    double delta = 0;

    // eta0 = 1/(r log T0), sigma0 = 1 - 1/(R log(4 T0 + t0)), (delta, kappa)
    // from the positivity solve.
    static RegionParams make(const SmoothingKernel& k, double R, double r, double T0 = kT0,
                             double t0 = 1.0, double root_tol = 1e-12);

    PositivityParams positivity() const { return {eta0, sigma0, 10.0}; }
    PairParams pair() const { return {eta0, sigma0, kappa, delta}; }

    void validate() const;
};

// r log T0 / (R log(4 T0 + t0)); throws OmegaOutOfRange outside [0, 1].
double omega_of(const RegionParams& p);

}  // namespace zr

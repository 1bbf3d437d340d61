#pragma once

#include <optional>

#include "zr/kernel.hpp"

namespace zr {

struct PositivityParams {
    double eta0;
    double sigma0;
    double y0 = 10.0;

    void validate() const;
};

struct DeltaKappa {
    double delta;
    double kappa;
};

double kappa1(const SmoothingKernel& k, double delta, const PositivityParams& p);
double kappa2(const SmoothingKernel& k, double delta, const PositivityParams& p);
double kappa3(const SmoothingKernel& k, double delta, const PositivityParams& p);

// Lower and upper ends of the admissible kappa window at a given delta.
double kappa_window_low(double delta);
double kappa_window_high(double delta);

// Crossing of kappa2 (decreasing) and kappa3 (increasing) on [0.5, 0.75].
DeltaKappa kappa_crossing(const SmoothingKernel& k, const PositivityParams& p,
                          double root_tol = 1e-12);

// The crossing, rejected with WindowViolation if kappa leaves the window.
// At eta0 = 0 the crossing is (0.618034, 1/sqrt5), just above the window.
DeltaKappa solve_delta_kappa(const SmoothingKernel& k, const PositivityParams& p,
                             double root_tol = 1e-12);

bool stechkin_inequality_check(double beta, double y, double sigma);

// Parameters of D(s) = F~(s) - kappa F~(s + delta) for the pair test.
struct PairParams {
    double eta;
    double sigma;
    double kappa;
    double delta;
};

// D(sigma - beta + iy) + D(sigma - 1 + beta + iy)
double D_pair(const SmoothingKernel& k, double beta, double y, const PairParams& p);
bool D_pair_positivity_sample(const SmoothingKernel& k, double beta, double y,
                              const PairParams& p);

struct PairWitness {
    double beta, y, value;
};

// Grid over beta in [1/2, sigma] (n_beta points) and y in [0.1, 20]
// (n_y points). Returns the most negative point if any fails.
std::optional<PairWitness> D_pair_grid_check(const SmoothingKernel& k, const PairParams& p,
                                             int n_beta = 10, int n_y = 20);

}  // namespace zr

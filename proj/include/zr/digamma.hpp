#pragma once

namespace zr {

struct DigammaBoundParams {
    double x0, x1, y0;
    double kappa, delta;

    void validate() const;
};

enum class YRegime { small_y, large_y };

// Re psi(x/2 + i y/2), x > 0, through the sawtooth integral representation
// summed interval by interval. Accurate to about 1e-12.
double re_digamma(double x, double y);

// psi(x, y) - kappa psi(x + delta, y) in the notation above.
double psi_kappa_delta(double x, double y, double kappa, double delta);

double r1_bound(const DigammaBoundParams& p);
double r2_bound(const DigammaBoundParams& p);
double r3_bound(const DigammaBoundParams& p);

// small_y: r1.  large_y: min(r2, r3), so that for |y| >= y0
// psi_kappa_delta(x, y) <= (1 - kappa) log(|y|/2) + bound.
double psi_diff_bound(const DigammaBoundParams& p, YRegime regime);

// Majorant of |Re psi(1/4 + iT/2)|. For |T| >= 1/2 this is the asymptotic
// bound; below 1/2 it is the exact maximum -psi(1/4) = gamma + pi/2 + 3 log 2.
double U0(double T);

// The two-branch formula exactly as usually printed. Its first branch is
// smaller than |psi(1/4)| and is kept only for comparison.
double U0_printed(double T);

// The |T| > 1/2 where log(|T|/2) = 2/(1 + 4T^2), a corner of U0 (about 2.21).
// Quadratures over U0 should break there.
double U0_corner();

}  // namespace zr

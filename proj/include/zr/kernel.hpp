#pragma once

#include <optional>
#include <vector>

namespace zr {

// Kernel shape parameter, restricted to the open interval (pi/2, pi).
class Theta {
public:
    explicit Theta(double value);
    double value() const { return value_; }
    friend bool operator==(Theta, Theta) = default;

private:
    double value_;
};

inline constexpr double kDefaultTheta = 1.848;

struct MonotonicityThresholds {
    std::optional<double> x1;  // F~(., y) increasing on [0, x1]
    double x2;                 // F~(., y) decreasing on [x2, inf)
};

// The compactly supported smoothing weight h on [0, d1] together with the
// constants that the remainder estimates consume. Immutable once built.
class SmoothingKernel {
public:
    explicit SmoothingKernel(Theta theta);

    Theta theta() const { return theta_; }

    double d1 = 0;       // support endpoint, -2 theta / tan theta
    double g1 = 0;       // h(0)
    double g2 = 0;       // integral of h
    double g3 = 0;       // integral of h(u) e^{-u}
    double m = 0;        // sup |h''|
    double m1 = 0;       // sup |h'''|
    double uh2_sup = 0;  // sup |u h''(u)|

    double h(double u) const;
    // h' from the closed form (not clamped to the support)
    double slope(double u) const;
    // order must be 2 or 3
    double deriv(double u, int order) const;

    // order 0: int |h''| e^{-zu};  1: int |h'''| e^{-zu};  2: int u |h''| e^{-zu}
    double M(double z, int order = 0) const;

    // int_0^d1 exp(-x t / eta) cos(y t / eta) h(t) dt
    double F_tilde(double eta, double x, double y, double tol = 5e-13) const;

    // Upper bound on |F~(x,y) - eta g1 x / (x^2 + y^2)|.
    double H_bound(double eta, double x, double y, bool fine = false) const;

    MonotonicityThresholds monotonicity_thresholds(double eta, double y) const;

    // Sign changes of h'' and h''' strictly inside (0, d1).
    const std::vector<double>& h2_zeros() const { return h2_zeros_; }
    const std::vector<double>& h3_zeros() const { return h3_zeros_; }

private:
    Theta theta_;
    double tan_, sec2_, sin_, sin2_;
    std::vector<double> h2_zeros_, h3_zeros_;
};

SmoothingKernel kernel_constants(Theta theta);

}  // namespace zr

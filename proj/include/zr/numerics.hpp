#pragma once

#include <functional>
#include <span>
#include <vector>

namespace zr {

using Fn = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
};

struct ToleranceConfig {
    double quad_abs_tol = 1e-11;
    double root_tol = 1e-12;
    double minimize_tol = 1e-9;
    int max_subdivisions = 10'000;

    void validate() const;
};

// Sum in a fixed binary-tree order; result depends only on the input order.
double pairwise_sum(std::span<const double> xs);

// Adaptive Gauss-Kronrod (7/15). The error estimate is |K15 - G7| summed
// over the final partition, with no heuristic rescaling.
QuadratureResult integrate(const Fn& f, double a, double b, double tol,
                           int max_subdivisions = 10'000);

// Same, starting from a caller supplied partition (sorted breakpoints,
// first and last are the integration limits). Useful for kinks of |g|
// and for integrands spread over many decades.
QuadratureResult integrate(const Fn& f, std::span<const double> breakpoints,
                           double tol, int max_subdivisions = 10'000);

// Breakpoints a, a+s, a+2s, a+4s, ... up to b.
std::vector<double> geometric_partition(double a, double b, double first_step = 1.0);

// Integral over [a, inf). tail_bound(T) must bound |int_T^inf f|.
// The truncation point is the first of a + 2^k (k = 0, 1, ...) whose tail
// bound is at most tol/2; the reported error includes that tail bound.
QuadratureResult integrate_improper_upper(const Fn& f, double a, const Fn& tail_bound,
                                          double tol, int max_subdivisions = 10'000);

// Bisection. Returns the midpoint of the final bracket (width <= tol).
double find_root(const Fn& f, double lo, double hi, double tol);

// Golden-section search for a unimodal f. Returns the midpoint of the final
// bracket (width <= tol).
double minimize_scalar(const Fn& f, double lo, double hi, double tol);

}  // namespace zr

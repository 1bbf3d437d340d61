#include "zr/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

namespace {

constexpr int kSupGrid = 10'000;
constexpr double kMTol = 1e-10;

// Interior sign changes of g on (a, b), located by bisection.
std::vector<double> sign_changes(const Fn& g, double a, double b) {
    constexpr int n = 2000;
    std::vector<double> out;
    double prev_u = a + (b - a) / n;
    double prev = g(prev_u);
    for (int i = 2; i < n; ++i) {
        const double u = a + (b - a) * i / n;
        const double v = g(u);
        if (std::signbit(v) != std::signbit(prev) && v != 0.0 && prev != 0.0)
            out.push_back(find_root(g, prev_u, u, 1e-15));
        prev = v;
        prev_u = u;
    }
    return out;
}

double grid_sup(const Fn& g, double a, double b) {
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i <= kSupGrid; ++i) {
        const double v = std::abs(g(a + (b - a) * i / kSupGrid));
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = a + (b - a) * std::max(best - 1, 0) / kSupGrid;
    const double hi = a + (b - a) * std::min(best + 1, kSupGrid) / kSupGrid;
    const double u = minimize_scalar([&](double x) { return -std::abs(g(x)); }, lo, hi, 1e-13);
    return std::max(best_val, std::abs(g(u)));
}

std::vector<double> with_ends(double a, const std::vector<double>& inner, double b) {
    std::vector<double> bp{a};
    bp.insert(bp.end(), inner.begin(), inner.end());
    bp.push_back(b);
    return bp;
}

}  // namespace

Theta::Theta(double value) : value_(value) {
    if (!(value > std::numbers::pi / 2 && value < std::numbers::pi))
        throw InvalidArgument("theta must lie in (pi/2, pi), got " + std::to_string(value));
}

SmoothingKernel::SmoothingKernel(Theta theta) : theta_(theta) {
    const double th = theta.value();
    tan_ = std::tan(th);
    sec2_ = 1.0 + tan_ * tan_;
    sin_ = std::sin(th);
    sin2_ = std::sin(2 * th);

    const double t = tan_;
    d1 = -2 * th / t;
    g1 = sec2_ * (3 - th * t - 3 * th / t);
    g2 = 2 * sec2_ * (1 - th / t) * (1 - th / t);
    g3 = 2 * t * t + 3 - 3 * th * t - 3 * th / t;

    auto h2 = [this](double u) { return deriv(u, 2); };
    auto h3 = [this](double u) { return deriv(u, 3); };
    h2_zeros_ = sign_changes(h2, 0.0, d1);
    h3_zeros_ = sign_changes(h3, 0.0, d1);

    m = grid_sup(h2, 0.0, d1);
    m1 = grid_sup(h3, 0.0, d1);
    uh2_sup = grid_sup([&](double u) { return u * deriv(u, 2); }, 0.0, d1);
}

double SmoothingKernel::h(double u) const {
    if (u < 0.0 || u > d1) return 0.0;
    const double th = theta_.value();
    const double t = tan_;
    const double p = -th / t - u / 2;
    const double inner = sec2_ * p * std::cos(u * t) - 2 * th / t - u -
                         std::sin(2 * th + u * t) / sin2_ + 2 * (1 + std::sin(th + u * t) / sin_);
    return sec2_ * inner;
}

double SmoothingKernel::slope(double u) const {
    const double th = theta_.value();
    const double t = tan_;
    const double p = -th / t - u / 2;
    const double ut = u * t;
    const double inner = sec2_ * (-0.5 * std::cos(ut) - p * t * std::sin(ut)) - 1 -
                         t * std::cos(2 * th + ut) / sin2_ + 2 * t * std::cos(th + ut) / sin_;
    return sec2_ * inner;
}

double SmoothingKernel::deriv(double u, int order) const {
    const double th = theta_.value();
    const double t = tan_;
    const double p = -th / t - u / 2;
    const double ut = u * t;
    double inner;
    switch (order) {
        case 2:
            inner = sec2_ * (t * std::sin(ut) - p * t * t * std::cos(ut)) +
                    t * t * std::sin(2 * th + ut) / sin2_ - 2 * t * t * std::sin(th + ut) / sin_;
            break;
        case 3:
            inner = sec2_ * (1.5 * t * t * std::cos(ut) + p * t * t * t * std::sin(ut)) +
                    t * t * t * std::cos(2 * th + ut) / sin2_ -
                    2 * t * t * t * std::cos(th + ut) / sin_;
            break;
        default:
            throw OrderUnsupported("derivative order " + std::to_string(order));
    }
    return sec2_ * inner;
}

double SmoothingKernel::M(double z, int order) const {
    Fn f;
    std::vector<double> bp;
    switch (order) {
        case 0:
            f = [this, z](double u) { return std::abs(deriv(u, 2)) * std::exp(-z * u); };
            bp = with_ends(0.0, h2_zeros_, d1);
            break;
        case 1:
            f = [this, z](double u) { return std::abs(deriv(u, 3)) * std::exp(-z * u); };
            bp = with_ends(0.0, h3_zeros_, d1);
            break;
        case 2:
            f = [this, z](double u) { return u * std::abs(deriv(u, 2)) * std::exp(-z * u); };
            bp = with_ends(0.0, h2_zeros_, d1);
            break;
        default:
            throw OrderUnsupported("M order " + std::to_string(order));
    }
    return integrate(f, bp, kMTol, 100'000).value;
}

double SmoothingKernel::F_tilde(double eta, double x, double y, double tol) const {
    if (!(eta > 0)) throw InvalidArgument("eta must be positive");
    const double a = x / eta, b = y / eta;
    auto f = [&](double t) { return std::exp(-a * t) * std::cos(b * t) * h(t); };
    return integrate(f, 0.0, d1, tol, 200'000).value;
}

double SmoothingKernel::H_bound(double eta, double x, double y, bool fine) const {
    const double r2 = x * x + y * y;
    if (!(r2 > 0)) throw InvalidArgument("H bound undefined at the origin");
    const double e3 = eta * eta * eta;
    if (!fine) return M(x / eta, 0) * eta * eta / r2;
    return m * e3 * std::abs(x) * std::abs(x * x - 3 * y * y) / (r2 * r2 * r2) +
           M(x / eta, 1) * e3 / std::pow(r2, 1.5);
}

MonotonicityThresholds SmoothingKernel::monotonicity_thresholds(double eta, double y) const {
    if (!(eta > 0) || !(y > 0)) throw InvalidArgument("thresholds need eta > 0, y > 0");
    const double l1 = M(0.0, 0);
    const double e1 = std::numbers::sqrt2 * l1 / g1 * eta;
    const double e2 = 2 * uh2_sup / g1 * eta;
    const double e3 = (uh2_sup + std::numbers::sqrt2 * l1) / g1 * eta;
    MonotonicityThresholds out{std::nullopt, e3 + std::sqrt(y * y + e3 * e3)};
    const double c = y / 2 - e1;
    if (c * c >= e2) out.x1 = c + std::sqrt(c * c - e2);
    return out;
}

SmoothingKernel kernel_constants(Theta theta) { return SmoothingKernel(theta); }

}  // namespace zr

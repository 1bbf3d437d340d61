#include "zr/region.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

double K_omega(const SmoothingKernel& k, double omega, const TrigPolynomial& poly, double tol) {
    if (!(omega >= 0 && omega <= 1)) throw OmegaOutOfRange("omega = " + std::to_string(omega));
    const double a0 = poly.a[0], a1 = poly.a[1];
    auto f = [&](double t) { return (a1 * std::exp(-t) - a0) * k.h(t) * std::exp(omega * t); };
    return integrate(f, 0.0, k.d1, tol).value;
}

double R0_value(const SmoothingKernel& k, const RegionParams& p, const TrigPolynomial& poly,
                const StepOptions& opt) {
    const double w = opt.omega_ratio ? p.r / p.R : omega_of(p);
    const double K = K_omega(k, w, poly, opt.tol.quad_abs_tol);
    if (!(K > 0)) throw InvalidArgument("K(omega) = " + std::to_string(K) + " is not positive");
    return poly.A() / 2 * k.g1 * (1 - p.kappa) / K;
}

IterationRecord R0_step(const SmoothingKernel& k, double R, double r, const TrigPolynomial& poly,
                        const StepOptions& opt) {
    const auto p = RegionParams::make(k, R, r, opt.T0, opt.t0, opt.tol.root_tol);
    const auto c = assemble_C(k, p, poly, opt.remainder);
    IterationRecord rec;
    rec.R_in = R;
    rec.r_in = r;
    rec.eta0 = p.eta0;
    rec.kappa = p.kappa;
    rec.delta = p.delta;
    rec.alpha1 = c.alpha1;
    rec.alpha2 = c.alpha2;
    rec.alpha3 = c.alpha3;
    rec.C_at_eta0 = c.value_at_eta0;
    rec.R0_out = R0_value(k, p, poly, opt);
    return rec;
}

double fixed_point_r(const SmoothingKernel& k, double R, const TrigPolynomial& poly,
                     const StepOptions& opt) {
    constexpr double tol = 1e-7;
    auto gap = [&](double r) {
        return R0_value(k, RegionParams::make(k, R, r, opt.T0, opt.t0, opt.tol.root_tol), poly, opt) - r;
    };
    double lo = 5.0, hi = R;
    if (gap(hi) >= 0) return hi;
    if (gap(lo) < 0) throw NoSignChange("R0(r) < r already at r = 5");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) >= 0 ? lo : hi) = mid;
    }
    return lo;
}

std::vector<IterationRecord> iterate(double R_init, const std::vector<double>& r_schedule,
                                     const SmoothingKernel& k, const TrigPolynomial& poly,
                                     const StepOptions& opt, int max_steps) {
    std::vector<IterationRecord> out;
    double R = R_init;
    if (!r_schedule.empty()) {
        for (double r : r_schedule) {
            out.push_back(R0_step(k, R, r, poly, opt));
            out.back().step = static_cast<int>(out.size());
            R = out.back().R0_out;
        }
        return out;
    }
    for (int s = 1; s <= max_steps; ++s) {
        const double r = fixed_point_r(k, R, poly, opt);
        auto rec = R0_step(k, R, r, poly, opt);
        rec.step = s;
        if (rec.R0_out > R + 1e-12)
            throw NonContraction("R0 " + std::to_string(rec.R0_out) + " exceeds R " + std::to_string(R));
        out.push_back(rec);
        if (std::abs(R - rec.R0_out) < 1e-5) break;
        R = rec.R0_out;
    }
    return out;
}

ThetaOptimum optimize_theta(double R, double r, const TrigPolynomial& poly, const StepOptions& opt,
                            double lo, double hi) {
    auto objective = [&](double th) {
        try {
            const SmoothingKernel k(Theta{th});
            return R0_value(k, RegionParams::make(k, R, r, opt.T0, opt.t0, opt.tol.root_tol), poly, opt);
        } catch (const Error&) {
            // inadmissible theta (no kappa window, or K <= 0): never the minimum
            return std::numeric_limits<double>::infinity();
        }
    };
    const double th = minimize_scalar(objective, lo, hi, opt.tol.minimize_tol);
    const SmoothingKernel k(Theta{th});
    const auto p = RegionParams::make(k, R, r, opt.T0, opt.t0, opt.tol.root_tol);
    assemble_C(k, p, poly, opt.remainder);
    return {th, R0_value(k, p, poly, opt)};
}

std::vector<ThetaRecord> iterate_theta(double R_init,
                                       const std::vector<std::pair<double, double>>& schedule,
                                       const TrigPolynomial& poly, const StepOptions& opt,
                                       int max_steps) {
    std::vector<ThetaRecord> out;
    if (!schedule.empty()) {
        for (const auto& [R, r] : schedule) {
            const auto best = optimize_theta(R, r, poly, opt);
            out.push_back({static_cast<int>(out.size()) + 1, R, r, best.theta, best.R0});
        }
        return out;
    }
    double R = R_init;
    double th = kDefaultTheta;
    for (int s = 1; s <= max_steps; ++s) {
        const double r = fixed_point_r(SmoothingKernel(Theta{th}), R, poly, opt);
        const auto best = optimize_theta(R, r, poly, opt);
        out.push_back({s, R, r, best.theta, best.R0});
        if (best.R0 > R + 1e-12)
            throw NonContraction("R0 " + std::to_string(best.R0) + " exceeds R " + std::to_string(R));
        if (std::abs(R - best.R0) < 1e-5) break;
        R = best.R0;
        th = best.theta;
    }
    return out;
}

}  // namespace zr

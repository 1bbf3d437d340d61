#include "zr/params.hpp"

#include <cmath>
#include <string>

#include "zr/errors.hpp"

namespace zr {

RegionParams RegionParams::make(const SmoothingKernel& k, double R, double r, double T0, double t0,
                                double root_tol) {
    if (!(T0 > 1) || !(t0 >= 0)) throw InvalidArgument("need T0 > 1 and t0 >= 0");
    if (!(r >= 5 && r <= R))
        throw InvalidArgument("need 5 <= r <= R, got r=" + std::to_string(r) + " R=" + std::to_string(R));
    RegionParams p;
    p.T0 = T0;
    p.t0 = t0;
    p.R = R;
    p.r = r;
    p.theta = k.theta();
    p.eta0 = 1 / (r * std::log(T0));
    p.sigma0 = 1 - 1 / (R * std::log(4 * T0 + t0));
    const auto dk = solve_delta_kappa(k, p.positivity(), root_tol);
    p.delta = dk.delta;
    p.kappa = dk.kappa;
    return p;
}

void RegionParams::validate() const {
    if (!(r >= 5 && r <= R)) throw InvalidArgument("need 5 <= r <= R");
    if (std::abs(eta0 * r * std::log(T0) - 1) > 1e-12) throw InvalidArgument("eta0 inconsistent with r");
    if (std::abs((1 - sigma0) * R * std::log(4 * T0 + t0) - 1) > 1e-9)
        throw InvalidArgument("sigma0 inconsistent with R");
    positivity().validate();
    if (!(kappa >= kappa_window_low(delta) && kappa <= kappa_window_high(delta)))
        throw WindowViolation("kappa outside the admissible window");
}

double omega_of(const RegionParams& p) {
    const double w = p.r * std::log(p.T0) / (p.R * std::log(4 * p.T0 + p.t0));
    if (!(w >= 0 && w <= 1)) throw OmegaOutOfRange("omega = " + std::to_string(w));
    return w;
}

}  // namespace zr

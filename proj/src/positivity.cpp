#include "zr/positivity.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

namespace {

double kappa_numerator(const SmoothingKernel& k, double e) {
    return k.g1 * (1 - 2 * e) - k.m * e * e / (1 - 2 * e);
}

void check_delta(double delta) {
    if (!(delta >= 0.07 && delta <= 1)) throw InvalidArgument("delta must lie in [0.07, 1]");
}

}  // namespace

void PositivityParams::validate() const {
    if (!(eta0 >= 0 && eta0 <= 1e-2)) throw InvalidArgument("eta0 must lie in [0, 1e-2]");
    if (!(sigma0 >= 0.99 && sigma0 <= 1)) throw InvalidArgument("sigma0 must lie in [0.99, 1]");
    if (!(y0 >= 10)) throw InvalidArgument("y0 must be at least 10");
}

double kappa1(const SmoothingKernel& k, double delta, const PositivityParams& p) {
    check_delta(delta);
    const double e = p.eta0, s = p.sigma0, y = p.y0;
    const double e2 = e * e, e3 = e2 * e;
    const double num = k.g1 * (2 * s - 1) * y * y / (y * y + 1) -
                       ((3 * k.m + 3 * k.m * e + k.M(0.0, 1)) * e2 + k.m1 / (0.5 - e) * e3) / y;
    const double den = k.g1 * (2 * s + 2 * delta - 1) + (6 * k.m * e2 + 2 * k.m1 / delta * e3) / y;
    return num / den;
}

double kappa2(const SmoothingKernel& k, double delta, const PositivityParams& p) {
    check_delta(delta);
    const double e = p.eta0, d = delta;
    return kappa_numerator(k, e) /
           ((1 + 2 * d) * k.g1 + (1 / d + 1 / (1 + d - 2 * e)) * k.m * e * e);
}

double kappa3(const SmoothingKernel& k, double delta, const PositivityParams& p) {
    check_delta(delta);
    const double e = p.eta0, d = delta;
    const double w = 1 + d - 2 * e;
    return kappa_numerator(k, e) /
           ((1 / d + (1 + d) / (w * w)) * k.g1 + (1 / (d * d * d) + 1 / (w * w * w)) * k.m * e * e);
}

double kappa_window_low(double delta) {
    return 1 / (1 / std::pow(delta, 3) + 1 / std::pow(1 + delta, 3));
}

double kappa_window_high(double delta) { return 1 / (1 / delta + 1 / (0.99 + delta)); }

DeltaKappa kappa_crossing(const SmoothingKernel& k, const PositivityParams& p, double root_tol) {
    p.validate();
    const double d = find_root([&](double x) { return kappa2(k, x, p) - kappa3(k, x, p); }, 0.5,
                               0.75, root_tol);
    return {d, kappa2(k, d, p)};
}

DeltaKappa solve_delta_kappa(const SmoothingKernel& k, const PositivityParams& p, double root_tol) {
    const auto [d, kap] = kappa_crossing(k, p, root_tol);
    if (!(kap >= kappa_window_low(d) && kap <= kappa_window_high(d)))
        throw WindowViolation("kappa " + std::to_string(kap) + " outside the admissible window");
    return {d, kap};
}

bool stechkin_inequality_check(double beta, double y, double sigma) {
    using cd = std::complex<double>;
    const double tau = (1 + std::sqrt(1 + 4 * sigma * sigma)) / 2;
    const double c = 1 / std::sqrt(5.0);
    auto re_inv = [](cd z) { return (1.0 / z).real(); };
    const double v = re_inv({sigma - beta, y}) - c * re_inv({tau - beta, y}) +
                     re_inv({sigma - 1 + beta, y}) - c * re_inv({tau - 1 + beta, y});
    return v >= -1e-12;
}

double D_pair(const SmoothingKernel& k, double beta, double y, const PairParams& p) {
    auto D = [&](double x) {
        return k.F_tilde(p.eta, x, y) - p.kappa * k.F_tilde(p.eta, x + p.delta, y);
    };
    return D(p.sigma - beta) + D(p.sigma - 1 + beta);
}

bool D_pair_positivity_sample(const SmoothingKernel& k, double beta, double y, const PairParams& p) {
    return D_pair(k, beta, y, p) >= -1e-10;
}

std::optional<PairWitness> D_pair_grid_check(const SmoothingKernel& k, const PairParams& p,
                                             int n_beta, int n_y) {
    std::optional<PairWitness> worst;
    for (int i = 0; i < n_beta; ++i) {
        const double beta = 0.5 + (p.sigma - 0.5) * i / (n_beta - 1);
        for (int j = 0; j < n_y; ++j) {
            const double y = 0.1 + (20.0 - 0.1) * j / (n_y - 1);
            const double v = D_pair(k, beta, y, p);
            if (v < -1e-10 && (!worst || v < worst->value)) worst = PairWitness{beta, y, v};
        }
    }
    return worst;
}

}  // namespace zr

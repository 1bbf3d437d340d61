#include "zr/digamma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "zr/errors.hpp"
#include "zr/numerics.hpp"

namespace zr {

namespace {

using cd = std::complex<double>;

constexpr double kSawtoothTol = 1e-13;
constexpr double kSeriesFrom = 50.0;

// int_n^{n+1} (u - n - 1/2) / (u + z)^2 du with a = n + z.
cd sawtooth_piece(cd a) {
    if (std::abs(a) < kSeriesFrom) return std::log(1.0 + 1.0 / a) - (a + 0.5) / (a * (a + 1.0));
    // sum_{j>=3} (-1)^{j+1} (1/j - 1/2) a^{-j}; the exact form cancels badly here
    const cd w = 1.0 / a;
    cd pw = w * w * w;
    cd s = 0.0;
    for (int j = 3; j <= 16; ++j) {
        const double c = (j % 2 == 1 ? 1.0 : -1.0) * (1.0 / j - 0.5);
        s += c * pw;
        pw *= w;
    }
    return s;
}

// Past |n + z| >= 50 each piece is -1/(6 a^3) + e with |e| <= 0.3 |a|^{-4}.
// The -1/(6 a^3) part of the tail sum_{n>=N} is replaced by its midpoint
// integral -1/(12 (N - 1/2 + z)^2); what is left is bounded by the integral
// of 0.3 |a|^{-4} from N - 1 plus the midpoint error.
double sawtooth_tail_remainder(int n, double re, double im) {
    const double a = n - 1 + re;
    const double b = std::abs(im);
    const double quartic = b > 0 ? std::min(1 / (3 * a * a * a), std::numbers::pi / (4 * b * b * b))
                                 : 1 / (3 * a * a * a);
    return 0.3 * quartic + 0.25 / (a * a * a * a);
}

}  // namespace

void DigammaBoundParams::validate() const {
    if (!(0 < x0 && x0 <= x1 && x1 < y0))
        throw InvalidArgument("need 0 < x0 <= x1 < y0");
    if (!(delta >= 0 && delta <= 1)) throw InvalidArgument("need 0 <= delta <= 1");
    if (!(kappa >= 0 && kappa <= x0 / (x0 + delta)))
        throw InvalidArgument("need 0 <= kappa <= x0/(x0+delta)");
}

double re_digamma(double x, double y) {
    if (!(x > 0)) throw NonpositiveRealPart("x must be positive");
    const cd z(x / 2, y / 2);
    cd sum = 0.0;
    int n = 0;
    for (;; ++n) {
        const cd a = double(n) + z;
        if (std::abs(a) >= kSeriesFrom &&
            sawtooth_tail_remainder(n, z.real(), z.imag()) < kSawtoothTol) {
            const cd mid = double(n) - 0.5 + z;
            sum -= 1.0 / (12.0 * mid * mid);
            break;
        }
        sum += sawtooth_piece(a);
    }
    return 0.5 * std::log(x * x / 4 + y * y / 4) - x / (x * x + y * y) + sum.real();
}

double psi_kappa_delta(double x, double y, double kappa, double delta) {
    return re_digamma(x, y) - kappa * re_digamma(x + delta, y);
}

double r1_bound(const DigammaBoundParams& p) {
    const double k = p.kappa, d = p.delta;
    return (1 - k) / 2 * std::log((p.x1 + d) * (p.x1 + d) / 4 + p.y0 * p.y0 / 4) -
           p.x0 / (p.x1 * p.x1 + p.y0 * p.y0) + 1 / p.x0 + 2 * k / (p.x0 + d);
}

double r2_bound(const DigammaBoundParams& p) {
    const double k = p.kappa, d = p.delta;
    return (1 - k) / 2 * std::log((p.x1 + d) * (p.x1 + d) / (p.y0 * p.y0) + 1) +
           (std::atan(p.y0 / p.x1) + k * std::atan(p.y0 / (p.x1 + d))) / p.y0;
}

double r3_bound(const DigammaBoundParams& p) {
    const double k = p.kappa, d = p.delta;
    return (1 / p.x0 + k / (p.x0 + d)) / (3 * p.y0) +
           (p.x1 * p.x1 + k * (p.x1 + d) * (p.x1 + d)) / (2 * p.y0 * p.y0);
}

double psi_diff_bound(const DigammaBoundParams& p, YRegime regime) {
    p.validate();
    if (regime == YRegime::small_y) return r1_bound(p);
    return std::min(r2_bound(p), r3_bound(p));
}

double U0(double T) {
    const double a = std::abs(T);
    if (a < 0.5) return std::numbers::egamma + std::numbers::pi / 2 + 3 * std::numbers::ln2;
    return U0_printed(T);
}

double U0_printed(double T) {
    const double a = std::abs(T);
    const double q = 1 + 4 * a * a;
    if (a < 0.5) return 0.5 * std::log(16 / q) + 2 / q - std::numbers::pi / 2;
    return std::abs(std::log(a / 2) - 2 / q) + 2 / (3 * a) + 1 / (8 * a * a);
}

double U0_corner() {
    static const double corner =
        find_root([](double a) { return std::log(a / 2) - 2 / (1 + 4 * a * a); }, 2.0, 3.0, 1e-15);
    return corner;
}

}  // namespace zr

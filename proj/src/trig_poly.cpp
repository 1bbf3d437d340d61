#include "zr/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zr/errors.hpp"

namespace zr {

double TrigPolynomial::operator()(double y) const {
    double s = 0.0;
    for (int k = 0; k < 5; ++k) s += a[k] * std::cos(k * y);
    return s;
}

double TrigPolynomial::factored_value(double y) const {
    if (!factored_roots) throw InvalidArgument("polynomial has no factored form");
    const auto [c, cp] = *factored_roots;
    const double x = std::cos(y);
    return 8 * (c + x) * (c + x) * (cp + x) * (cp + x);
}

void TrigPolynomial::validate() const {
    for (double ak : a)
        if (!(ak >= 0)) throw InvalidArgument("trigonometric coefficients must be nonnegative");
    constexpr int n = 10'000;
    for (int i = 0; i <= n; ++i) {
        const double y = 2 * std::numbers::pi * i / n;
        const double v = (*this)(y);
        if (v < -1e-12) throw InvalidArgument("trigonometric polynomial negative at y=" + std::to_string(y));
        if (factored_roots && std::abs(v - factored_value(y)) > 1e-9)
            throw InvalidArgument("coefficients do not match the factored form");
    }
}

TrigPolynomial trig_poly_from_roots(double c, double cp) {
    // (c + x)(c' + x) = B + S x + x^2 with x = cos y
    const double B = c * cp, S = c + cp;
    const double x3 = 2 * S, x2 = S * S + 2 * B, x1 = 2 * B * S, x0 = B * B;
    // x^2 = (1 + cos 2y)/2, x^3 = (3 cos y + cos 3y)/4, x^4 = (3 + 4 cos 2y + cos 4y)/8
    TrigPolynomial p;
    p.a = {8 * (3.0 / 8 + x2 / 2 + x0), 8 * (3 * x3 / 4 + x1), 4 + 4 * x2, 2 * x3, 1.0};
    p.factored_roots = {c, cp};
    return p;
}

TrigPolynomial trig_poly_default() { return trig_poly_from_roots(0.91, 0.265); }

TrigPolynomial trig_poly_rosser_schoenfeld() { return trig_poly_from_roots(0.9126, 0.2766); }

}  // namespace zr

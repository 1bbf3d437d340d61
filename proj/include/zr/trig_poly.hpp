#pragma once

#include <array>
#include <optional>
#include <utility>

namespace zr {

// sum_k a_k cos(k y) >= 0 with a_k >= 0. When built from (c, c') it equals
// 8 (c + cos y)^2 (c' + cos y)^2.
struct TrigPolynomial {
    std::array<double, 5> a{};
    std::optional<std::pair<double, double>> factored_roots;

    double A() const { return a[1] + a[2] + a[3] + a[4]; }
    double operator()(double y) const;
    double factored_value(double y) const;  // requires factored_roots

    // Nonnegative coefficients and grid nonnegativity; factored form match.
    void validate() const;
};

// Expand 8 (c + cos y)^2 (c' + cos y)^2 with product-to-sum identities.
TrigPolynomial trig_poly_from_roots(double c, double cp);

// (0.91, 0.265): a = 10.91692658, 18.63362, 11.4517, 4.7, 1
TrigPolynomial trig_poly_default();
TrigPolynomial trig_poly_rosser_schoenfeld();

}  // namespace zr

#pragma once

namespace zr {

inline constexpr double kFirstZeroOrdinate = 14.134725146;

// Two-sided envelope N2(u) <= N(u) <= N1(u) for u >= t1:
//   N_{1,2}(u) = (u/2pi) log(u/(2 pi e)) +- (c_log log u + c_loglog log log u + c_const)
struct BacklundBounds {
    double t1 = kFirstZeroOrdinate;
    double c_log = 0.29992;
    double c_loglog = 0.0;
    double c_const = 5.225;

    double spread(double u) const;  // half of N1 - N2
};

// The classical 0.137 log u + 0.443 log log u + 5.225 form. The linear
// default coincides with it at t1 and dominates above.
BacklundBounds backlund_original();

enum class Side { upper, lower };

double N_main(double u);
double N_bound(double u, Side side, const BacklundBounds& b = {});

// 4 int_{t1}^inf N1(u)/u^3 du, a majorant of sum over all zeros of 1/gamma^2.
double sum_inverse_gamma_sq_at_zero(const BacklundBounds& b = backlund_original());
// Same integral with N2, a minorant.
double sum_inverse_gamma_sq_at_zero_lower(const BacklundBounds& b = backlund_original());

struct C30Terms {
    double J1, J2, J3;  // c30 = J1 - J2 + J3
};

// Majorant of sum over zeros with |gamma - t| >= 1 of 1/(gamma - t)^2 +
// 1/(gamma + t)^2, after integration by parts against the envelope.
// J2 and J3 nearly cancel for large t; c30 evaluates them as one
// integral over the distance from t.
double c30(double t, const BacklundBounds& b = {});

// The three integrals evaluated separately. Only usable for moderate t
// (cancellation loses about log10(t) digits).
C30Terms c30_terms(double t, const BacklundBounds& b = {});

}  // namespace zr

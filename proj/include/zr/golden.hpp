#pragma once

#include <array>
#include <string_view>

namespace zr::golden {

struct Constant {
    std::string_view name;
    double value;
    double tol;
};

// Kernel and parameter constants at theta = 1.848 and the step-1 (R, r).
inline constexpr std::array<Constant, 10> kConstants{{
    {"g1", 147.84112, 1e-4},
    {"g2", 62.17067, 1e-4},
    {"g3", 48.76676, 1e-4},
    {"d1", 1.05161, 1e-4},
    {"m", 1322.86625, 1e-4},
    {"m1", 4135.12706, 1e-4},
    {"M(0)", 521.632466, 1e-5},
    {"M(-1)", 822.67426, 1e-4},
    {"sigma0", 0.99555, 1e-5},
    {"eta0", 0.00763319, 1e-8},
}};

struct StepRow {
    double R, r, eta0_e3, kappa, delta;
    double alpha1, alpha2, alpha3, C_at_eta0, R0;
};

struct StepTol {
    double R, r, eta0_e3, kappa, delta;
    double alpha1, alpha2, alpha3, C_at_eta0, R0;
};

inline constexpr StepTol kStepTol{1e-5, 1e-5, 1e-5, 1e-5, 1e-5, 0.05, 0.5, 10, 1e-3, 1e-5};

// Fixed theta = 1.848, default polynomial. The C(eta0) entry of row 2 is
// not reproduced by its own alphas (they give -6.40).
inline constexpr std::array<StepRow, 6> kSteps{{
    {9.645908801, 5.97484, 7.63319, 0.438904, 0.620626, -3915.260, 344602.065, 5799250.773, -7.22827, 5.974849075},
    {5.974849075, 5.73045, 7.95873, 0.438525, 0.620748, -3916.747, 344602.065, 5841345.585, -7.22089, 5.730454010},
    {5.730454010, 5.70487, 7.99441, 0.438483, 0.620762, -3916.907, 344602.065, 5846103.683, -6.30271, 5.704872616},
    {5.704872616, 5.70208, 7.99832, 0.438479, 0.620763, -3916.907, 344602.065, 5846103.683, -6.29209, 5.702089881},
    {5.702089881, 5.70178, 7.99874, 0.438478, 0.620763, -3916.926, 344602.065, 5846682.864, -6.29080, 5.701785245},
    {5.701785245, 5.70174, 7.99880, 0.438478, 0.620763, -3916.927, 344602.065, 5846689.069, -6.29065, 5.701752890},
}};

struct ThetaRow {
    double R, r, theta, R0;
};

inline constexpr double kThetaTol = 5e-4;
inline constexpr double kThetaR0Tol = 1e-4;

inline constexpr std::array<ThetaRow, 7> kThetaSteps{{
    {9.645908801, 5.97145, 1.85362, 5.97146},
    {5.97146, 5.73008, 1.84834, 5.73009},
    {5.73009, 5.70483, 1.84781, 5.70484},
    {5.70484, 5.70208, 1.84775, 5.70210},
    {5.70210, 5.70178, 1.84774, 5.70180},
    {5.70180, 5.70174, 1.84774, 5.70176},
    {5.70176, 5.70174, 1.84774, 5.70175},
}};

// Step-1 remainder coefficients.
inline constexpr double kC1 = -2718.913;
inline constexpr Constant kQ1{"q1", -1141.389, 0.01};
inline constexpr Constant kQ2{"q2", 2.794e-15, 1e-17};
inline constexpr Constant kQ3{"q3", 26515.117, 0.1};
inline constexpr Constant kP1{"p1", -54.957, 0.01};
inline constexpr Constant kP2{"p2", 344602.065, 0.5};
inline constexpr Constant kP3{"p3", 3384045.191, 5};
inline constexpr double kC4Bound = 2.3887e6;
inline constexpr double kZeroSum0 = 0.098178;

inline constexpr double kFinalR0 = 5.70175;
inline constexpr double kFinalR0Tol = 1e-4;
inline constexpr double kRosserSchoenfeldR0 = 5.70216;

}  // namespace zr::golden

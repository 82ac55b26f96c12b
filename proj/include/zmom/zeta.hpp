// Evaluation of zeta(s), zeta'(s), zeta'/zeta(s), the theta function and
// Hardy's Z(t).
//
// Validated region: -2 <= Re s <= 4, |Im s| <= 1e6, s != 1. Inside it the
// evaluator picks one of three paths:
//   * |s-1| < 0.5       Laurent expansion with stored Stieltjes constants
//   * otherwise         Euler-Maclaurin (N = ceil(|t|/2)+20, 12 corrections)
//   * Z(t), t > 2000    Riemann-Siegel main sum + 4 remainder terms
// oracle_zeta is a deliberately independent slow path (binomially weighted
// alternating series) used by tests and nowhere else in the library.
//
// Every operation is pure; all of this is safe to call concurrently.
#pragma once

#include <complex>

#include "zmom/dd.hpp"

namespace zmom {

using Cplx = std::complex<double>;

struct EvalAccuracy {
    enum class Method { euler_maclaurin, riemann_siegel, laurent_near_pole, oracle_series };
    double abs_error_bound = 0.0; // modeled upper bound on |computed - true|
    Method method = Method::euler_maclaurin;
};

struct ZetaResult {
    Cplx value;
    EvalAccuracy acc;
};

inline constexpr double kEulerGamma = 0.57721566490153286061;

inline constexpr double kMaxImag = 1e6;
inline constexpr double kMinRe = -2.0;
inline constexpr double kMaxRe = 4.0;
inline constexpr double kPoleGuard = 1e-12;
inline constexpr double kLaurentRadius = 0.5;

ZetaResult zeta(Cplx s);
ZetaResult zeta_prime(Cplx s);
ZetaResult log_deriv(Cplx s); // zeta'/zeta

// Independent alternating-series evaluator; practical for |Im s| <= 200,
// Re s > -1. Throws ConvergenceFailure if the required term count exceeds
// the hard cap.
Cplx oracle_zeta(Cplx s, double target_error);

// Riemann-Siegel theta. theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double theta(double t);
Dd theta_dd(double t); // carries the sub-ulp bits needed by Z and Gram solving

struct HardyZResult {
    double z = 0.0;
    double fe_residual = 0.0; // Im(e^{i theta} zeta(1/2+it)) on the EM path
    double err_bound = 0.0;
};

// Z(t) = e^{i theta(t)} zeta(1/2 + it); real for real t.
double hardy_z(double t);
HardyZResult hardy_z_full(double t);
// Euler-Maclaurin-grade evaluation at any height (used for certification).
double hardy_z_accurate(double t);
// Scanning-grade evaluation (Riemann-Siegel above the crossover height).
double hardy_z_fast(double t);

// Riemann-Siegel path internals, exposed for validation tests.
double hardy_z_rs(double t);
double rs_remainder_coeff(int j, double p); // C_j(p), j = 0..3

} // namespace zmom

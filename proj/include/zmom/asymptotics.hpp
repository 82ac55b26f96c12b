// Closed-form predictions for S(delta,T), regime classification, the
// corrected error envelope and the numerical audit of its derivation chains,
// and the small-shift dominance analysis.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zmom/shift.hpp"

namespace zmom {

// Which rule gates the two secondary main terms.
enum class CutoffRule {
    log_threshold,    // active iff delta1 <= (log T)^{-2/5} (log log T)^{-1/5}
    quarter_interval, // active iff -a/log T <= delta1 < 1/4
};

struct PredictionBreakdown {
    double term_density = 0.0;         // zeta(1+2d1) (T/2pi) log(T/2pi e)
    double term_logderiv_plus = 0.0;   // 2 Re[z'/z(1+d)] zeta(1+2d1) (T/2pi)
    double term_cross = 0.0;           // -2 Re[zeta(1+conj d) zeta(1-d)/(1-d) (T/2pi)^{1-d}]
    double term_logderiv_minus = 0.0;  // gated: 2 Re[z'/z(1-conj d)] zeta(1-2d1)/(1-2d1) (T/2pi)^{1-2d1}
    double term_secondary_main = 0.0;  // gated: zeta(1-2d1)/(1-2d1) (T/2pi)^{1-2d1} (log(T/2pi) - 1/(1-2d1))
    bool cutoff_active = false;
    double total = 0.0;
};

// The five-term main formula. limit_mode evaluates the delta1 -> 0 limit
// (delta2 != 0 required); the pole-bearing pairs are merged analytically
// into term_density and term_logderiv_plus.
PredictionBreakdown main_term(const Shift& delta, double T, CutoffRule rule, bool limit_mode = false);

// (log T)^{-2/5} (log log T)^{-1/5}
double chi_threshold(double T);

// (|delta|^2/12) (T/2pi) log^4 T
double main_term_quadratic(const Shift& delta, double T);

// (1 - (sin pi alpha / pi alpha)^2) (T/2pi) log^2 T
double main_term_gonek(double alpha, double T);

// g(delta) with S(delta) = (T/2pi) Re g(delta) + O(T^{1/2+eps}); the
// quarter-interval rule gates its secondary terms. Supports limit mode.
std::complex<double> g_function(const Shift& delta, double T, bool limit_mode = false);

struct ExpansionResidual {
    double r = 0.0;      // |Re g - (|d|^2/12) log^4 T| / (|d|^2 log^3 T + |d|^3 log^5 T)
    double re_g = 0.0;
    double quadratic = 0.0;
};
ExpansionResidual g_expansion_check(const Shift& delta, double T, bool limit_mode = false);

// Largest eps on the grid such that Re g(delta) >= (1/24)|delta|^2 log^4 T
// for every sampled admissible delta with |delta| log T <= eps and
// |delta| >= T^{-1/4+0.05}. checked_out reports how many samples were
// non-vacuously tested at the returned eps; density scales the sampling.
double dominance_region(double T, const std::vector<double>& eps_grid, int* checked_out = nullptr,
                        int density = 8);

// Corrected error envelope E(T) with A = 1/(4*57.54).
double error_envelope(double delta1, double T, double a = 1.0);
inline constexpr double kEnvelopeA = 1.0 / (4.0 * 57.54);

struct RegimeReport {
    bool small_condition = false;  // |delta| sqrt(T) log^2 T <= small threshold
    bool large_condition = false;  // |delta| T^{(A/2)(log T)^{-2/5}(log log T)^{-1/5}} >= large threshold
    bool gap_zone = false;         // neither proxy fires
    int chi = 0;                   // log-threshold cutoff value at (delta1, T)
    bool indicator_quarter = false;
};
RegimeReport classify_regime(const Shift& delta, double T,
                             double small_threshold = 1e-2, double large_threshold = 0.1);

struct ChainStep {
    std::string id;
    double T = 0.0, delta1 = 0.0;
    bool literal = true; // literal inequality vs fitted-constant step
    bool ok = false;
    double lhs = 0.0, rhs = 0.0;
    double fitted = 0.0; // lhs/rhs for fitted steps
};

struct Section2Report {
    bool pass = false;
    double worst_fitted = 0.0;
    std::vector<ChainStep> steps;
    std::vector<std::string> failures;
};

// Numerical audit of the error-envelope derivation chains (both cases),
// with the paper's U(T, delta1) substituted. Asymptotic (o/<<) steps carry
// fitted constants whose boundedness is the PASS criterion.
Section2Report audit_section2(const std::vector<double>& T_grid, const std::vector<double>& delta1_grid,
                              double a = 1.0, double fitted_cap = 1e3);

} // namespace zmom

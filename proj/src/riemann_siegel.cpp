// Hardy Z(t) evaluation: Euler-Maclaurin route at all heights (certification
// grade) and the Riemann-Siegel main sum + remainder (scanning grade, engaged
// above the crossover height).
//
// Remainder terms use the classical coefficient functions C_j built from
// derivatives of Psi(p) = cos(2pi(p^2 - p - 1/16))/cos(2pi p). Psi is entire
// (zeros of the denominator are cancelled), so its Taylor series around the
// five centers {0, 1/4, 1/2, 3/4, 1} cover p in [0,1) with geometric tails;
// at the two singular centers numerator and denominator vanish to first
// order and the common factor x is divided out before the series division.
// The coefficient combinations in rs_remainder_coeff are validated against
// an Euler-Maclaurin ground-truth fit in the test suite.

#include <array>
#include <cmath>

#include "zmom/errors.hpp"
#include "zmom/kernels.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

constexpr int kDeg = 40;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRsCrossover = 2000.0; // public-path switch; scan switches at 200

using Series = std::array<double, kDeg + 1>;

// Taylor arrays of sin(v(x)), cos(v(x)) for v = a x + b x^2 via the ODE
// recurrence (k+1) s_{k+1} = a c_k + 2b c_{k-1}, (k+1) c_{k+1} = -(a s_k + 2b s_{k-1}).
void sincos_of_poly(double a, double b, Series& s, Series& c) {
    s.fill(0.0);
    c.fill(0.0);
    c[0] = 1.0;
    for (int k = 0; k < kDeg; ++k) {
        double cm1 = (k >= 1) ? c[k - 1] : 0.0;
        double sm1 = (k >= 1) ? s[k - 1] : 0.0;
        s[k + 1] = (a * c[k] + 2.0 * b * cm1) / double(k + 1);
        c[k + 1] = -(a * s[k] + 2.0 * b * sm1) / double(k + 1);
    }
}

struct PsiSeries {
    double center;
    Series q; // Taylor coefficients of Psi around center
};

PsiSeries build_psi_series(double c) {
    // numerator: cos(2pi u0 + v), v = 2pi(2c-1) x + 2pi x^2
    double u0 = c * c - c - 0.0625;
    Series vs, vc;
    sincos_of_poly(kTwoPi * (2.0 * c - 1.0), kTwoPi, vs, vc);
    Series num{}, den{};
    bool singular = (c == 0.25 || c == 0.75);
    if (singular) {
        // 2pi u0 = -pi/2 exactly: cos(-pi/2 + v) = sin(v)
        num = vs;
    } else {
        double cu = std::cos(kTwoPi * u0), su = std::sin(kTwoPi * u0);
        for (int k = 0; k <= kDeg; ++k) num[k] = cu * vc[k] - su * vs[k];
    }
    // denominator: cos(2pi c) cos(2pi x) - sin(2pi c) sin(2pi x)
    {
        Series xs, xc;
        sincos_of_poly(kTwoPi, 0.0, xs, xc);
        if (c == 0.25) {
            for (int k = 0; k <= kDeg; ++k) den[k] = -xs[k];
        } else if (c == 0.75) {
            den = xs;
        } else {
            double cc = std::cos(kTwoPi * c), sc = std::sin(kTwoPi * c);
            for (int k = 0; k <= kDeg; ++k) den[k] = cc * xc[k] - sc * xs[k];
        }
    }
    if (singular) {
        // both constant terms vanish identically; divide the common x out
        for (int k = 0; k < kDeg; ++k) {
            num[k] = num[k + 1];
            den[k] = den[k + 1];
        }
        num[kDeg] = den[kDeg] = 0.0;
    }
    PsiSeries out{c, {}};
    for (int k = 0; k <= kDeg; ++k) {
        double acc = num[k];
        for (int j = 1; j <= k; ++j) acc -= den[j] * out.q[k - j];
        out.q[k] = acc / den[0];
    }
    return out;
}

const std::array<PsiSeries, 5>& psi_series() {
    static const std::array<PsiSeries, 5> tables = {
        build_psi_series(0.0), build_psi_series(0.25), build_psi_series(0.5),
        build_psi_series(0.75), build_psi_series(1.0)};
    return tables;
}

// k-th derivative of Psi at p in [0, 1).
double psi_deriv(int k, double p) {
    const auto& tabs = psi_series();
    int idx = int(std::floor(p * 4.0 + 0.5));
    if (idx < 0) idx = 0;
    if (idx > 4) idx = 4;
    const PsiSeries& S = tabs[idx];
    double dx = p - S.center;
    double acc = 0.0;
    for (int j = kDeg; j >= k; --j) {
        double fall = 1.0;
        for (int i = 0; i < k; ++i) fall *= double(j - i);
        acc = acc * dx + S.q[j] * fall;
    }
    return acc;
}

} // namespace

double rs_remainder_coeff(int j, double p) {
    const double pi2 = M_PI * M_PI;
    switch (j) {
        case 0:
            return psi_deriv(0, p);
        case 1:
            return -psi_deriv(3, p) / (96.0 * pi2);
        case 2:
            return psi_deriv(2, p) / (64.0 * pi2) + psi_deriv(6, p) / (18432.0 * pi2 * pi2);
        case 3:
            return -psi_deriv(1, p) / (64.0 * pi2) - psi_deriv(5, p) / (3840.0 * pi2 * pi2) -
                   psi_deriv(9, p) / (5308416.0 * pi2 * pi2 * pi2);
        default:
            throw EvaluationFailure("remainder coefficient index out of range");
    }
}

double hardy_z_rs(double t) {
    if (!(t > 50.0)) throw DomainTooSmall("Riemann-Siegel path needs t > 50");
    double x = t / kTwoPi;
    double a = std::sqrt(x);
    auto m = static_cast<std::uint64_t>(a);
    double p = a - double(m);

    auto sums = kernels::dirichlet_sums(0.5, t, 1, m, false);
    Dd th = theta_dd(t);
    double sth, cth;
    dd_sincos(dd_reduce_two_pi(th), sth, cth);
    double main = 2.0 * (cth * sums.re - sth * sums.im);

    double inv_a = 1.0 / a;
    double corr = rs_remainder_coeff(0, p) +
                  inv_a * (rs_remainder_coeff(1, p) +
                           inv_a * (rs_remainder_coeff(2, p) + inv_a * rs_remainder_coeff(3, p)));
    double rem = ((m % 2 == 0) ? -1.0 : 1.0) * std::pow(x, -0.25) * corr;
    return main + rem;
}

HardyZResult hardy_z_full(double t) {
    if (!(t >= 2.0)) throw DomainTooSmall("hardy_z requires t >= 2");
    ZetaResult zr = zeta(Cplx(0.5, t));
    Dd th = theta_dd(t);
    double sth, cth;
    dd_sincos(dd_reduce_two_pi(th), sth, cth);
    HardyZResult out;
    out.z = cth * zr.value.real() - sth * zr.value.imag();
    out.fe_residual = sth * zr.value.real() + cth * zr.value.imag();
    out.err_bound = zr.acc.abs_error_bound + 1e-12 * std::abs(zr.value);
    return out;
}

double hardy_z_accurate(double t) { return hardy_z_full(t).z; }

double hardy_z(double t) {
    if (!(t >= 2.0)) throw DomainTooSmall("hardy_z requires t >= 2");
    if (t <= kRsCrossover) return hardy_z_accurate(t);
    return hardy_z_rs(t);
}

double hardy_z_fast(double t) {
    if (!(t >= 2.0)) throw DomainTooSmall("hardy_z requires t >= 2");
    if (t <= 200.0) return hardy_z_accurate(t);
    return hardy_z_rs(t);
}

} // namespace zmom

// Riemann-Siegel theta via Stirling's series for Im log Gamma(1/4 + it/2).
//
// For t >= 24 the argument modulus exceeds 12 and Stirling applies directly;
// the leading (w-1/2)log(w) - w part is carried in double-double because
// theta itself grows past 1e5 where plain-double ulps would eat the budget.
// For 2 <= t < 24 the argument is shifted up by the recurrence first; theta
// is O(10) there and plain double arithmetic is enough.

#include <cmath>
#include <complex>

#include "zmom/errors.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

// B_{2k}/((2k)(2k-1)) for the log-Gamma correction series.
constexpr double kLgCoeff[9] = {
    0.0,
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
};

Dd ln_pi() {
    static const Dd v = dd_log(ddc::pi);
    return v;
}

// Im of the Stirling correction sum at w, |w| >= 12.
double stirling_im_correction(std::complex<double> w) {
    std::complex<double> iw = 1.0 / w;
    std::complex<double> iw2 = iw * iw;
    std::complex<double> p = iw;
    double acc = 0.0;
    for (int k = 1; k <= 8; ++k) {
        acc += kLgCoeff[k] * p.imag();
        p *= iw2;
    }
    return acc;
}

// Im log Gamma(u + iv) for v >= 24, u in (0, 1), in dd.
Dd im_log_gamma_dd(double u, double v) {
    Dd mod2 = dd_add(two_prod(v, v), u * u); // exact pieces for u = 1/4
    Dd logmod = dd_mul(dd_log(mod2), 0.5);
    Dd x = dd_div(Dd{u, 0.0}, Dd{v, 0.0});
    Dd arg = dd_sub(ddc::pi_half, dd_atan_small(x));
    // Im[(w - 1/2) log w] = (u - 1/2) arg + v log|w|
    Dd im = dd_add(dd_mul(arg, u - 0.5), dd_mul(logmod, v));
    im = dd_add(im, -v); // Im[-w]
    im = dd_add(im, stirling_im_correction({u, v}));
    return im;
}

} // namespace

Dd theta_dd(double t) {
    if (!(t >= 2.0)) throw DomainTooSmall("theta requires t >= 2");
    if (t > 2.0 * kMaxImag) throw OutOfValidatedRegion("theta beyond validated height");
    const double u = 0.25, v = 0.5 * t;
    if (t >= 24.0) {
        Dd im = im_log_gamma_dd(u, v);
        return dd_sub(im, dd_mul(ln_pi(), v));
    }
    // shifted path: log Gamma(w) = log Gamma(w+M) - sum log(w+m); theta is
    // O(10) here so plain double is enough
    const int M = 12;
    std::complex<double> w(u, v);
    std::complex<double> ws(u + M, v);
    std::complex<double> main = (ws - 0.5) * std::log(ws) - ws;
    double im = main.imag() + stirling_im_correction(ws);
    for (int m = 0; m < M; ++m) im -= std::arg(w + double(m));
    return {im - v * ln_pi().hi, 0.0};
}

double theta(double t) { return dd_to_double(theta_dd(t)); }

} // namespace zmom

// Scalar reference kernel for the truncated Dirichlet sum.
//
// Per term: log n in double-double, phase t*log n reduced mod 2pi in
// double-double, magnitude n^-sigma in double. Accumulation is Neumaier-
// compensated; the result for a given (sigma, t, n0, n1) is a pure function
// of its inputs.

#include <cmath>

#include "zmom/dd.hpp"
#include "zmom/kernels.hpp"

namespace zmom::kernels {

namespace {

struct CompAcc {
    double s = 0.0, c = 0.0;
    void add(double x) {
        Dd t = two_sum(s, x);
        s = t.hi;
        c += t.lo;
    }
    double value() const { return s + c; }
};

} // namespace

UnitTerm unit_term(double sigma, double t, double n) {
    Dd ln = dd_log(n);
    double mag = std::exp(-sigma * ln.hi) * (1.0 - sigma * ln.lo);
    Dd phase = dd_mul(ln, t);
    Dd red = dd_reduce_two_pi(phase);
    double sp, cp;
    dd_sincos(red, sp, cp);
    return {mag * cp, -mag * sp, mag, dd_to_double(ln)};
}

DirichletSums dirichlet_sums_scalar(double sigma, double t, std::uint64_t n0, std::uint64_t n1, bool want_log_weight) {
    CompAcc re, im, lw_re, lw_im, abs;
    for (std::uint64_t n = n0; n <= n1; ++n) {
        UnitTerm u = unit_term(sigma, t, double(n));
        re.add(u.re);
        im.add(u.im);
        abs.add(u.mag);
        if (want_log_weight) {
            lw_re.add(u.log_n * u.re);
            lw_im.add(u.log_n * u.im);
        }
    }
    return {re.value(), im.value(), lw_re.value(), lw_im.value(), abs.value()};
}

} // namespace zmom::kernels

// Discrete moments over cached zeros:
//   moment_s      S(delta,T) = sum_{0<gamma<=T} |zeta(1/2+delta1+i(gamma+delta2))|^2
//   moment_deriv  sum |zeta'(rho)|^2
//   moment_gonek  S at delta = 2 pi i alpha / log(T/2pi)
//
// Sums run over contiguous index chunks into exact accumulators, so the
// result is bit-identical for any chunk count; the bilinear defining form
// zeta(rho+delta) zeta(1-rho+conj delta) is computed alongside as a
// cross-check of the |.|^2 computation path.
#pragma once

#include <complex>
#include <cstdint>

#include "zmom/shift.hpp"
#include "zmom/zeros.hpp"

namespace zmom {

struct MomentResult {
    std::complex<double> value;  // re: |.|^2-path sum; im: bilinear-path imaginary residual
    std::int64_t n_zeros = 0;
    double t_max = 0.0;
    double sum_error_estimate = 0.0;
    double per_zero_eval_error = 0.0;
    double bilinear_re = 0.0;    // real part of the bilinear-path sum
};

MomentResult moment_s(const Shift& delta, double T, const ZeroCache& cache,
                      int chunks = 0, int threads = 0);
MomentResult moment_deriv(double T, const ZeroCache& cache,
                          int chunks = 0, int threads = 0);
MomentResult moment_gonek(double alpha, double T, const ZeroCache& cache,
                          int chunks = 0, int threads = 0);

} // namespace zmom

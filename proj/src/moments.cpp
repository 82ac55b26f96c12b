// Moment sums over the zero cache.

#include <cmath>
#include <tuple>

#include "zmom/errors.hpp"
#include "zmom/exact_acc.hpp"
#include "zmom/moments.hpp"
#include "zmom/parallel.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

constexpr double kEps = 2.2204460492503131e-16;

struct Partial {
    ExactAcc sq, bil_re, bil_im;
    double max_term_bound = 0.0;
};

// One evaluation pair per zero: f(gamma) -> (value at rho+shift, accuracy),
// g(gamma) -> value at the reflected point 1-rho+conj(shift).
template <class Eval>
MomentResult run_moment(double T, const ZeroCache& cache, int chunks, int threads, Eval&& eval) {
    if (T > cache.t_max_certified * (1.0 + 1e-12))
        throw BeyondCertifiedHeight("moment beyond certified cache height");
    if (threads <= 0) threads = default_threads();
    std::size_t n = 0;
    while (n < cache.records.size() && cache.records[n].gamma <= T) ++n;
    if (chunks <= 0) chunks = threads;

    auto partials = run_chunked<Partial>(0, n, chunks, threads,
                                         [&](int, std::size_t lo, std::size_t hi, Partial& p) {
        for (std::size_t i = lo; i < hi; ++i) {
            double gamma = cache.records[i].gamma;
            auto [z1, z2, bound] = eval(gamma);
            double term = z1.real() * z1.real() + z1.imag() * z1.imag();
            p.sq.add(term);
            std::complex<double> prod = z1 * z2;
            p.bil_re.add(prod.real());
            p.bil_im.add(prod.imag());
            double tb = 2.0 * std::abs(z1) * bound + 2.0 * kEps * term;
            if (tb > p.max_term_bound) p.max_term_bound = tb;
        }
    });

    Partial total;
    for (auto& p : partials) {
        total.sq.merge(p.sq);
        total.bil_re.merge(p.bil_re);
        total.bil_im.merge(p.bil_im);
        if (p.max_term_bound > total.max_term_bound) total.max_term_bound = p.max_term_bound;
    }

    MomentResult out;
    out.n_zeros = static_cast<std::int64_t>(n);
    out.t_max = T;
    double sq = total.sq.finalize();
    out.bilinear_re = total.bil_re.finalize();
    out.value = {sq, total.bil_im.finalize()};
    out.per_zero_eval_error = total.max_term_bound;
    out.sum_error_estimate = double(n) * total.max_term_bound + 2.0 * kEps * std::fabs(sq);
    // the two computation paths must agree (they differ only in rounding)
    if (n > 0 && std::fabs(sq - out.bilinear_re) >
                     1e-8 * std::max(std::fabs(sq), double(n) * total.max_term_bound + 1e-300))
        throw EvaluationFailure("bilinear and squared-modulus moment paths diverged");
    return out;
}

} // namespace

MomentResult moment_s(const Shift& delta, double T, const ZeroCache& cache, int chunks, int threads) {
    const double sigma = 0.5 + delta.delta1;
    if (sigma < kMinRe || sigma > kMaxRe)
        throw OutOfValidatedRegion("shift takes evaluation outside the validated strip");
    return run_moment(T, cache, chunks, threads, [&](double gamma) {
        Cplx s(sigma, gamma + delta.delta2);
        ZetaResult z1 = zeta(s);
        ZetaResult z2 = zeta(Cplx(sigma, -(gamma + delta.delta2)));
        return std::tuple<Cplx, Cplx, double>(z1.value, z2.value,
                                              z1.acc.abs_error_bound + z2.acc.abs_error_bound);
    });
}

MomentResult moment_deriv(double T, const ZeroCache& cache, int chunks, int threads) {
    return run_moment(T, cache, chunks, threads, [&](double gamma) {
        ZetaResult z1 = zeta_prime(Cplx(0.5, gamma));
        ZetaResult z2 = zeta_prime(Cplx(0.5, -gamma));
        return std::tuple<Cplx, Cplx, double>(z1.value, z2.value,
                                              z1.acc.abs_error_bound + z2.acc.abs_error_bound);
    });
}

MomentResult moment_gonek(double alpha, double T, const ZeroCache& cache, int chunks, int threads) {
    double L = std::log(T / (2.0 * M_PI));
    if (!(std::fabs(alpha) <= L / (4.0 * M_PI)))
        throw AlphaOutOfRange("|alpha| must be <= log(T/2pi)/(4 pi)");
    Shift delta(0.0, 2.0 * M_PI * alpha / L);
    return moment_s(delta, T, cache, chunks, threads);
}

} // namespace zmom

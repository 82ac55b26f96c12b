// Independent slow evaluator: binomially weighted alternating series
// (P. Borwein's d_k scheme for the eta function).
//
//   zeta(s) = -1/(d_n (1 - 2^{1-s})) sum_{k=0}^{n-1} (-1)^k (d_k - d_n) (k+1)^{-s} + err
//   |err| <= 3/(3+sqrt8)^n * (1+2|t|) e^{pi|t|/2} / |1-2^{1-s}|   (sigma >= 1/2)
//
// Term powers and the accumulation run in long double so this path shares
// neither series nor phase machinery with the main evaluator; it exists to
// cross-check it. Practical region: Re s > -1, |Im s| <= 200.

#include <cmath>
#include <complex>
#include <vector>

#include "zmom/errors.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

constexpr int kHardCap = 380; // d_n ~ (3+sqrt8)^n must stay finite in double

int choose_terms(Cplx s, double target) {
    const double t = std::fabs(s.imag());
    const double sigma = s.real();
    long double denom = std::abs(std::complex<long double>(1.0L, 0.0L) -
                                 std::exp((1.0L - (long double)sigma) * 0.69314718055994530942L) *
                                     std::complex<long double>(std::cos((long double)(-t) * 0.69314718055994530942L),
                                                               std::sin((long double)(-t) * 0.69314718055994530942L)));
    if (denom < 1e-14L) denom = 1e-14L;
    double log_need = M_PI * t / 2.0 + std::log(3.0 * (1.0 + 2.0 * t)) - std::log((double)denom) - std::log(target);
    if (sigma < 0.5) log_need += (0.5 - sigma) * std::log(8.0); // empirical widening below the critical line
    int n = static_cast<int>(std::ceil(log_need / std::log(3.0 + std::sqrt(8.0)))) + 12;
    return n < 24 ? 24 : n;
}

} // namespace

Cplx oracle_zeta(Cplx s, double target_error) {
    if (!(target_error > 0)) throw ConvergenceFailure("target_error must be positive");
    if (target_error < 5e-16)
        throw ConvergenceFailure("target below the fixed-width accuracy floor of the series");
    if (std::abs(s - Cplx(1.0, 0.0)) < kPoleGuard) throw PoleAtOne();
    if (s.real() <= -1.0 || std::fabs(s.imag()) > 200.0)
        throw OutOfValidatedRegion("oracle practical region is Re s > -1, |Im s| <= 200");

    int n = choose_terms(s, target_error);
    if (n > kHardCap) throw ConvergenceFailure("oracle series would need more terms than the hard cap");

    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    std::vector<long double> d(n + 1);
    long double term = 1.0L / n;
    long double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0L * (long double)(n + i - 1) * (long double)(n - i + 1) /
                ((long double)(2 * i) * (long double)(2 * i - 1));
        acc += term;
        d[i] = n * acc;
    }

    const long double sigma = s.real(), t = s.imag();
    std::complex<long double> sum = 0.0L;
    for (int k = 0; k < n; ++k) {
        long double lk = std::log((long double)(k + 1));
        long double mag = std::exp(-sigma * lk);
        std::complex<long double> pw(mag * std::cos(t * lk), -mag * std::sin(t * lk));
        long double coef = d[k] - d[n];
        sum += (k % 2 == 0 ? coef : -coef) * pw;
    }
    std::complex<long double> one(1.0L, 0.0L);
    std::complex<long double> two_pow =
        std::exp((one - std::complex<long double>(sigma, t)) * 0.69314718055994530942L);
    std::complex<long double> z = -sum / (d[n] * (one - two_pow));
    Cplx out(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
        throw ConvergenceFailure("oracle series produced a non-finite value");
    return out;
}

} // namespace zmom

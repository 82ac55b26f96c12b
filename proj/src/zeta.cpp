// zeta, zeta' and zeta'/zeta on the validated strip.
//
// Euler-Maclaurin: zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//                            + sum_{k=1..K} B_{2k}/(2k)! poch(s,2k-1) N^{-s-2k+1} + R_K,
// |R_K| <= |first omitted term| * |s+2K+1|/(sigma+2K+1), N = ceil(|t|/2)+20,
// K = 12. The B_{2k}/(2k)! coefficients are rebuilt at startup from zeta(2k)
// so no long Bernoulli table is transcribed by hand.

#include <cmath>

#include "zmom/errors.hpp"
#include "zmom/kernels.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

constexpr int kEmCorrections = 12;
constexpr double kEps = 2.2204460492503131e-16;

// B_{2k}/(2k)! for k = 1..14 via B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k)/(2pi)^{2k}.
struct EmCoeffs {
    double c[15];
    double ratio[15]; // c[k+1]/c[k]
    EmCoeffs() {
        c[0] = 0.0;
        // low orders exactly (the zeta(2k) series tail is too fat there)
        c[1] = 1.0 / 12.0;      // B2/2!
        c[2] = -1.0 / 720.0;    // B4/4!
        c[3] = 1.0 / 30240.0;   // B6/6!
        for (int k = 4; k <= 14; ++k) {
            double z2k = 1.0;
            for (int n = 2; n < 1200; ++n) {
                double term = std::pow(double(n), -2.0 * k);
                z2k += term;
                if (term < 1e-20) break;
            }
            double sign = (k % 2 == 1) ? 1.0 : -1.0;
            c[k] = sign * 2.0 * z2k / std::pow(2.0 * M_PI, 2.0 * k);
        }
        for (int k = 1; k <= 13; ++k) ratio[k] = c[k + 1] / c[k];
        ratio[14] = 0.0;
    }
};

const EmCoeffs& em() {
    static const EmCoeffs e;
    return e;
}

// Stieltjes constants gamma_0..gamma_10 (20 significant digits; validated
// against the oracle path in the test suite).
constexpr double kStieltjes[11] = {
    kEulerGamma,
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458661,
    0.0023253700654673000574,
    0.00079332381730106270175,
    -0.00023876934543019960987,
    -0.00052728956705775104607,
    -0.00035212335380303950960,
    -0.000034394774418088048178,
    0.00020533281490906479468,
};

struct LaurentCoeffs {
    double a[11]; // (-1)^n gamma_n / n!
    LaurentCoeffs() {
        double fact = 1.0;
        for (int n = 0; n <= 10; ++n) {
            if (n > 0) fact *= n;
            a[n] = ((n % 2 == 0) ? 1.0 : -1.0) * kStieltjes[n] / fact;
        }
    }
};

const LaurentCoeffs& laurent() {
    static const LaurentCoeffs l;
    return l;
}

void check_region(Cplx s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw OutOfValidatedRegion("non-finite argument");
    if (std::abs(s - Cplx(1.0, 0.0)) < kPoleGuard) throw PoleAtOne();
    if (s.real() < kMinRe || s.real() > kMaxRe || std::fabs(s.imag()) > kMaxImag)
        throw OutOfValidatedRegion("argument outside the validated strip");
}

std::size_t em_length(double t) { return static_cast<std::size_t>(std::ceil(std::fabs(t) / 2.0)) + 20; }

// N^-s with a dd-accurate phase.
Cplx unit_power(double sigma, double t, double n) {
    auto u = kernels::unit_term(sigma, t, n);
    return {u.re, u.im};
}

struct EmCore {
    Cplx value;
    Cplx deriv;
    double bound;
    double deriv_bound;
};

EmCore em_eval(Cplx s, bool want_deriv) {
    const double sigma = s.real(), t = s.imag();
    const auto N = em_length(t);
    const double Nd = double(N);
    auto sums = kernels::dirichlet_sums(sigma, t, 1, N - 1, want_deriv);

    Cplx main(sums.re, sums.im);
    Cplx main_d(-sums.lw_re, -sums.lw_im);

    Cplx NmS = unit_power(sigma, t, Nd);
    double lnN = dd_to_double(dd_log(Nd));
    Cplx sm1 = s - 1.0;
    Cplx tail1 = Nd * NmS / sm1;     // N^{1-s}/(s-1)
    Cplx tail2 = 0.5 * NmS;          // N^-s/2
    Cplx tail1_d = -lnN * tail1 - tail1 / sm1;
    Cplx tail2_d = -lnN * tail2;

    // corrections, built incrementally: poch = s(s+1)...(s+2k-2) and its
    // s-derivative carried side by side, pw = N^{-s-2k+1}
    const auto& e = em();
    Cplx corr = 0.0, corr_d = 0.0;
    double corr_abs = 0.0;
    Cplx pw = NmS / Nd;
    Cplx poch = s;
    Cplx poch_d = 1.0;
    const double invN2 = 1.0 / (Nd * Nd);
    for (int k = 1; k <= kEmCorrections; ++k) {
        Cplx term = e.c[k] * poch * pw;
        corr += term;
        corr_abs += std::abs(term);
        if (want_deriv) corr_d += e.c[k] * (poch_d - lnN * poch) * pw;
        Cplx f1 = s + double(2 * k - 1), f2 = s + double(2 * k);
        poch_d = poch_d * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        pw *= invN2;
    }
    // first omitted correction drives the remainder bound
    const int K = kEmCorrections;
    Cplx omitted = e.c[K + 1] * poch * pw;
    double tail_factor = std::abs(s + double(2 * K + 1)) / (sigma + double(2 * K + 1));
    double rem = std::abs(omitted) * tail_factor;
    double round_model = kEps * (6.0 * sums.abs + 4.0 * (std::abs(tail1) + std::abs(tail2) + corr_abs));
    EmCore out;
    out.value = main + tail1 + tail2 + corr;
    out.bound = rem + round_model + kEps * std::abs(out.value);
    if (want_deriv) {
        out.deriv = main_d + tail1_d + tail2_d + corr_d;
        double rem_d = std::abs(e.c[K + 1]) * (std::abs(poch_d) + lnN * std::abs(poch)) * std::abs(pw) * 2.0 * tail_factor;
        out.deriv_bound = rem_d + round_model * (lnN + 1.0) + kEps * std::abs(out.deriv);
    } else {
        out.deriv = 0.0;
        out.deriv_bound = 0.0;
    }
    return out;
}

struct LaurentCore {
    Cplx value;
    Cplx deriv;
    double bound;
    double deriv_bound;
};

LaurentCore laurent_eval(Cplx s) {
    const auto& L = laurent();
    Cplx w = s - 1.0;
    Cplx A = 0.0, Ad = 0.0;
    for (int n = 10; n >= 1; --n) {
        A = A * w + L.a[n];
        Ad = Ad * w + double(n) * L.a[n];
    }
    Cplx A0 = A * w + L.a[0]; // sum a_n w^n
    double aw = std::abs(w);
    double tail = 3e-11 * std::pow(aw, 11.0);
    LaurentCore out;
    out.value = 1.0 / w + A0;
    out.bound = tail + 4.0 * kEps * (1.0 / aw + 1.0);
    out.deriv = -1.0 / (w * w) + Ad;
    out.deriv_bound = 11.0 * tail / (aw > 1e-3 ? aw : 1e-3) + 4.0 * kEps * (1.0 / (aw * aw) + 1.0);
    return out;
}

void check_finite(Cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw EvaluationFailure("non-finite result escaping evaluator");
}

} // namespace

ZetaResult zeta(Cplx s) {
    check_region(s);
    if (std::abs(s - Cplx(1.0, 0.0)) < kLaurentRadius) {
        auto l = laurent_eval(s);
        check_finite(l.value);
        return {l.value, {l.bound, EvalAccuracy::Method::laurent_near_pole}};
    }
    auto e = em_eval(s, false);
    check_finite(e.value);
    return {e.value, {e.bound, EvalAccuracy::Method::euler_maclaurin}};
}

ZetaResult zeta_prime(Cplx s) {
    check_region(s);
    if (std::abs(s - Cplx(1.0, 0.0)) < kLaurentRadius) {
        auto l = laurent_eval(s);
        check_finite(l.deriv);
        return {l.deriv, {l.deriv_bound, EvalAccuracy::Method::laurent_near_pole}};
    }
    auto e = em_eval(s, true);
    check_finite(e.deriv);
    return {e.deriv, {e.deriv_bound, EvalAccuracy::Method::euler_maclaurin}};
}

ZetaResult log_deriv(Cplx s) {
    check_region(s);
    if (std::abs(s - Cplx(1.0, 0.0)) < kLaurentRadius) {
        // (-1 + w^2 A') / (w (1 + w A)): no cancellation against the pole
        const auto& L = laurent();
        Cplx w = s - 1.0;
        Cplx A = 0.0, Ad = 0.0;
        for (int n = 10; n >= 1; --n) {
            A = A * w + L.a[n];
            Ad = Ad * w + double(n) * L.a[n];
        }
        A = A * w + L.a[0];
        Cplx num = -1.0 + w * w * Ad;
        Cplx den = w * (1.0 + w * A);
        Cplx q = num / den;
        check_finite(q);
        double aw = std::abs(w);
        double bound = std::abs(q) * (8.0 * kEps + 3e-11 * std::pow(aw, 10.0));
        return {q, {bound, EvalAccuracy::Method::laurent_near_pole}};
    }
    auto e = em_eval(s, true);
    double az = std::abs(e.value);
    if (az <= 1e-12) throw NearZeroOfZeta();
    Cplx q = e.deriv / e.value;
    check_finite(q);
    double bound = std::abs(q) * (e.bound / az + (std::abs(e.deriv) > 0 ? e.deriv_bound / std::abs(e.deriv) : 0.0) + 2.0 * kEps);
    return {q, {bound, EvalAccuracy::Method::euler_maclaurin}};
}

} // namespace zmom

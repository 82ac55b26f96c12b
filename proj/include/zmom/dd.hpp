// Double-double ("compensated pair") arithmetic built from error-free
// transformations. Used for phase computations t*log(n) mod 2pi, where a
// plain double log would lose the low bits that a large t then amplifies,
// and for the theta function at heights where the value dwarfs its ulp.
//
// Everything here is plain 64-bit floating point; no extended or
// arbitrary-precision types. two_prod uses a Dekker split so the scalar
// reference path does not depend on hardware FMA.
#pragma once

#include <cmath>
#include <cstdint>

namespace zmom {

struct Dd {
    double hi = 0.0;
    double lo = 0.0;
};

// |a| >= |b| assumed.
inline Dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline Dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// Dekker split: a = hi + lo with hi holding the top 26 bits.
inline void dd_split(double a, double& hi, double& lo) {
    constexpr double splitter = 134217729.0; // 2^27 + 1
    double t = splitter * a;
    hi = t - (t - a);
    lo = a - hi;
}

inline Dd two_prod(double a, double b) {
    double p = a * b;
    double ah, al, bh, bl;
    dd_split(a, ah, al);
    dd_split(b, bh, bl);
    double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

inline Dd dd_norm(double hi, double lo) { return quick_two_sum(hi, lo); }

inline Dd dd_add(Dd a, Dd b) {
    Dd s = two_sum(a.hi, b.hi);
    Dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_add(Dd a, double b) {
    Dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }
inline Dd dd_sub(Dd a, Dd b) { return dd_add(a, dd_neg(b)); }
inline Dd dd_sub(Dd a, double b) { return dd_add(a, -b); }

inline Dd dd_mul(Dd a, Dd b) {
    Dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline Dd dd_mul(Dd a, double b) {
    Dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline Dd dd_div(Dd a, Dd b) {
    double q1 = a.hi / b.hi;
    Dd r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    Dd q = quick_two_sum(q1, q2);
    return dd_add(q, q3);
}

inline Dd dd_div(double a, double b) { return dd_div(Dd{a, 0.0}, Dd{b, 0.0}); }

inline double dd_to_double(Dd a) { return a.hi + a.lo; }

namespace ddc {
// Two-term constants (QD library values).
inline constexpr Dd two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr Dd pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr Dd pi_half{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr Dd ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline constexpr double inv_two_pi = 1.591549430918953358e-01;
} // namespace ddc

namespace detail {
struct AtanhCoeffs {
    Dd c[18]; // 2/(2k+1)
    AtanhCoeffs() {
        for (int k = 0; k < 18; ++k) c[k] = dd_div(Dd{2.0, 0.0}, Dd{double(2 * k + 1), 0.0});
    }
};
inline const AtanhCoeffs& atanh_coeffs() {
    static const AtanhCoeffs a;
    return a;
}
} // namespace detail

// log(x) for finite x > 0, accurate to ~1e-29 absolute.
// Mantissa folded into [1/sqrt2, sqrt2), then 2*atanh((m-1)/(m+1)).
inline Dd dd_log(double x) {
    int e = 0;
    double m = std::frexp(x, &e); // m in [0.5, 1)
    if (m < 0.70710678118654752) {
        m *= 2.0;
        e -= 1;
    }
    // m - 1 is exact (Sterbenz), m + 1 needs a two_sum.
    Dd num{m - 1.0, 0.0};
    Dd den = two_sum(m, 1.0);
    Dd r = dd_div(num, den);
    Dd z = dd_mul(r, r); // z <= 0.0295
    const auto& cf = detail::atanh_coeffs();
    Dd s = cf.c[17];
    for (int k = 16; k >= 0; --k) s = dd_add(dd_mul(s, z), cf.c[k]);
    Dd logm = dd_mul(r, s);
    return dd_add(dd_mul(ddc::ln2, double(e)), logm);
}

// log of a dd value (first-order correction on the lo part).
inline Dd dd_log(Dd x) {
    Dd base = dd_log(x.hi);
    double c = x.lo / x.hi;
    return dd_add(base, c - 0.5 * c * c);
}

// atan(x) for |x| <= 0.25 via the Taylor series.
inline Dd dd_atan_small(Dd x) {
    Dd z = dd_mul(x, x);
    Dd s{0.0, 0.0};
    for (int k = 22; k >= 1; --k) {
        double c = (k & 1) ? -1.0 / double(2 * k + 1) : 1.0 / double(2 * k + 1);
        s = dd_add(dd_mul(s, z), Dd{c, 0.0});
    }
    s = dd_add(dd_mul(s, z), 1.0);
    return dd_mul(x, s);
}

// phi mod 2pi, result in [-pi, pi] up to rounding spill.
inline Dd dd_reduce_two_pi(Dd phi) {
    double k = std::nearbyint(phi.hi * ddc::inv_two_pi);
    if (k == 0.0) return phi;
    Dd kp = two_prod(k, ddc::two_pi.hi);
    Dd r = dd_sub(phi, kp);
    r = dd_sub(r, Dd{k * ddc::two_pi.lo, 0.0});
    return r;
}

// sin/cos of a reduced dd angle (|phi.hi| <= pi + eps): libm on the hi part
// plus the first-order lo correction.
inline void dd_sincos(Dd phi, double& s, double& c) {
    double sh = std::sin(phi.hi);
    double ch = std::cos(phi.hi);
    s = sh + phi.lo * ch;
    c = ch - phi.lo * sh;
}

} // namespace zmom

// AVX2+FMA variant of the Dirichlet-sum kernel. Same algorithm as the scalar
// reference: double-double log and phase, reduction mod 2pi, polynomial
// sin/cos on the reduced argument, compensated per-lane accumulation with a
// fixed-order lane merge. This TU is compiled with -mavx2 -mfma and is only
// reached when runtime detection (or force_isa) selects it.

#include <immintrin.h>

#include <cmath>

#include "zmom/dd.hpp"
#include "zmom/kernels.hpp"

namespace zmom::kernels {

namespace {

struct Vd {
    __m256d v;
};
inline Vd vset(double x) { return {_mm256_set1_pd(x)}; }
inline Vd operator+(Vd a, Vd b) { return {_mm256_add_pd(a.v, b.v)}; }
inline Vd operator-(Vd a, Vd b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline Vd operator*(Vd a, Vd b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline Vd vfma(Vd a, Vd b, Vd c) { return {_mm256_fmadd_pd(a.v, b.v, c.v)}; }
inline Vd vneg(Vd a) { return {_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0))}; }
inline Vd vround(Vd a) { return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)}; }

struct Vdd {
    Vd hi, lo;
};
inline Vdd vdd_neg(Vdd a) { return {vneg(a.hi), vneg(a.lo)}; }

inline Vdd v_two_sum(Vd a, Vd b) {
    Vd s = a + b;
    Vd bb = s - a;
    Vd err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline Vdd v_quick_two_sum(Vd a, Vd b) {
    Vd s = a + b;
    return {s, b - (s - a)};
}

inline Vdd v_two_prod(Vd a, Vd b) {
    Vd p = a * b;
    Vd err = {_mm256_fmsub_pd(a.v, b.v, p.v)};
    return {p, err};
}

inline Vdd v_dd_add(Vdd a, Vdd b) {
    Vdd s = v_two_sum(a.hi, b.hi);
    Vdd t = v_two_sum(a.lo, b.lo);
    s.lo = s.lo + t.hi;
    s = v_quick_two_sum(s.hi, s.lo);
    s.lo = s.lo + t.lo;
    return v_quick_two_sum(s.hi, s.lo);
}

inline Vdd v_dd_add_d(Vdd a, Vd b) {
    Vdd s = v_two_sum(a.hi, b);
    s.lo = s.lo + a.lo;
    return v_quick_two_sum(s.hi, s.lo);
}

inline Vdd v_dd_mul(Vdd a, Vdd b) {
    Vdd p = v_two_prod(a.hi, b.hi);
    p.lo = vfma(a.hi, b.lo, vfma(a.lo, b.hi, p.lo));
    return v_quick_two_sum(p.hi, p.lo);
}

inline Vdd v_dd_mul_d(Vdd a, Vd b) {
    Vdd p = v_two_prod(a.hi, b);
    p.lo = vfma(a.lo, b, p.lo);
    return v_quick_two_sum(p.hi, p.lo);
}

inline Vdd v_dd_div(Vdd a, Vdd b) {
    Vd q1 = {_mm256_div_pd(a.hi.v, b.hi.v)};
    Vdd r = v_dd_add(a, vdd_neg(v_dd_mul_d(b, q1)));
    Vd q2 = {_mm256_div_pd(r.hi.v, b.hi.v)};
    r = v_dd_add(r, vdd_neg(v_dd_mul_d(b, q2)));
    Vd q3 = {_mm256_div_pd(r.hi.v, b.hi.v)};
    Vdd q = v_quick_two_sum(q1, q2);
    return v_dd_add_d(q, q3);
}

// Series coefficients shared with the scalar path: built once via dd_div so
// both ISAs use bit-identical constants.
struct LogCoeffs {
    Dd c[15]; // 2/(2k+1)
    LogCoeffs() {
        for (int k = 0; k < 15; ++k) c[k] = dd_div(2.0, double(2 * k + 1));
    }
};
const LogCoeffs& log_coeffs() {
    static const LogCoeffs lc;
    return lc;
}

// dd log of four positive normal doubles (exact integers in practice).
inline Vdd v_dd_log(Vd x) {
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffll);
    const __m256i half_bits = _mm256_set1_epi64x(0x3fe0000000000000ll);
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll); // 2^52
    __m256i bits = _mm256_castpd_si256(x.v);
    __m256i ebits = _mm256_srli_epi64(bits, 52); // biased exponent, < 2^11
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(ebits, magic)),
                              _mm256_set1_pd(4503599627370496.0 + 1022.0));
    __m256d f = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));
    // fold f < 1/sqrt2 -> f*2, e -= 1
    __m256d lt = _mm256_cmp_pd(f, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
    f = _mm256_blendv_pd(f, _mm256_add_pd(f, f), lt);
    e = _mm256_add_pd(e, _mm256_and_pd(lt, _mm256_set1_pd(-1.0)));

    Vd fv{f};
    Vdd num{fv - vset(1.0), vset(0.0)}; // exact by Sterbenz
    Vdd den = v_two_sum(fv, vset(1.0));
    Vdd r = v_dd_div(num, den);
    Vdd z = v_dd_mul(r, r);

    const LogCoeffs& lc = log_coeffs();
    // tail of the atanh series (k = 14..5) in plain double
    Vd s_tail = vset(lc.c[14].hi);
    for (int k = 13; k >= 5; --k) s_tail = vfma(s_tail, z.hi, vset(lc.c[k].hi));
    // head (k = 4..0) in dd
    Vdd s{s_tail, vset(0.0)};
    for (int k = 4; k >= 0; --k) {
        s = v_dd_mul(s, z);
        s = v_dd_add(s, Vdd{vset(lc.c[k].hi), vset(lc.c[k].lo)});
    }
    Vdd logm = v_dd_mul(r, s);
    Vdd loge = v_dd_mul_d(Vdd{vset(ddc::ln2.hi), vset(ddc::ln2.lo)}, Vd{e});
    return v_dd_add(loge, logm);
}

// sin/cos polynomials on |r| <= pi/4 (Taylor through degree 17/18).
inline void v_sincos_reduced(Vd rh, Vd rl, Vd& s_out, Vd& c_out) {
    Vd z = rh * rh;
    Vd sp = vset(2.8114572543455206e-15); //  1/17!
    sp = vfma(sp, z, vset(-7.6471637318198164e-13));
    sp = vfma(sp, z, vset(1.6059043836821613e-10));
    sp = vfma(sp, z, vset(-2.5052108385441720e-08));
    sp = vfma(sp, z, vset(2.7557319223985888e-06));
    sp = vfma(sp, z, vset(-1.9841269841269841e-04));
    sp = vfma(sp, z, vset(8.3333333333333333e-03));
    sp = vfma(sp, z, vset(-1.6666666666666666e-01));
    Vd sin_h = vfma(sp * z, rh, rh); // r + r^3 S(z)

    Vd cp = vset(-1.5619206968586226e-16); // -1/18!
    cp = vfma(cp, z, vset(4.7794773323873853e-14));
    cp = vfma(cp, z, vset(-1.1470745597729725e-11));
    cp = vfma(cp, z, vset(2.0876756987868099e-09));
    cp = vfma(cp, z, vset(-2.7557319223985893e-07));
    cp = vfma(cp, z, vset(2.4801587301587302e-05));
    cp = vfma(cp, z, vset(-1.3888888888888889e-03));
    cp = vfma(cp, z, vset(4.1666666666666666e-02));
    Vd cos_h = vfma(cp * z, z, vfma(z, vset(-0.5), vset(1.0))); // 1 - z/2 + z^2 C(z)

    // first-order correction with the low word of the reduced argument
    s_out = vfma(rl, cos_h, sin_h);
    c_out = vfma(vneg(rl), sin_h, cos_h);
}

// exp of four doubles, |x| <= 45, relative error a few ulp.
inline Vd v_exp(Vd x) {
    const double ln2_hi = 6.93147180369123816490e-01;
    const double ln2_lo = 1.90821492927058770002e-10;
    Vd k = vround(x * vset(1.4426950408889634));
    Vd r = vfma(k, vset(-ln2_hi), x);
    r = vfma(k, vset(-ln2_lo), r);
    Vd p = vset(7.6471637318198164e-13); // 1/15!
    p = vfma(p, r, vset(1.1470745597729725e-11));
    p = vfma(p, r, vset(1.6059043836821613e-10));
    p = vfma(p, r, vset(2.0876756987868099e-09));
    p = vfma(p, r, vset(2.5052108385441720e-08));
    p = vfma(p, r, vset(2.7557319223985893e-07));
    p = vfma(p, r, vset(2.7557319223985888e-06));
    p = vfma(p, r, vset(2.4801587301587302e-05));
    p = vfma(p, r, vset(1.9841269841269841e-04));
    p = vfma(p, r, vset(1.3888888888888889e-03));
    p = vfma(p, r, vset(8.3333333333333333e-03));
    p = vfma(p, r, vset(4.1666666666666666e-02));
    p = vfma(p, r, vset(1.6666666666666666e-01));
    p = vfma(p, r, vset(0.5));
    p = vfma(p, r, vset(1.0));
    p = vfma(p, r, vset(1.0));
    __m128i ki = _mm256_cvtpd_epi32(k.v);
    __m256i k64 = _mm256_cvtepi32_epi64(ki);
    __m256i sc = _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
    return p * Vd{_mm256_castsi256_pd(sc)};
}

struct VComp {
    Vd s{vset(0.0)}, c{vset(0.0)};
    void add(Vd x) {
        Vdd t = v_two_sum(s, x);
        s = t.hi;
        c = c + t.lo;
    }
    // deterministic lane merge, lane 0 -> 3
    double value() const {
        alignas(32) double sv[4], cv[4];
        _mm256_store_pd(sv, s.v);
        _mm256_store_pd(cv, c.v);
        double acc = 0.0, comp = 0.0;
        for (int i = 0; i < 4; ++i) {
            Dd t = two_sum(acc, sv[i]);
            acc = t.hi;
            comp += t.lo + cv[i];
        }
        return acc + comp;
    }
};

} // namespace

DirichletSums dirichlet_sums_avx2(double sigma, double t, std::uint64_t n0, std::uint64_t n1, bool want_log_weight) {
    if (n1 < n0) return {};
    VComp re, im, lw_re, lw_im, abs;
    const Vd two_pi_hi = vset(ddc::two_pi.hi), two_pi_lo = vset(ddc::two_pi.lo);
    const Vd inv_two_pi = vset(ddc::inv_two_pi);
    const Vd pi2_hi = vset(ddc::pi_half.hi), pi2_lo = vset(ddc::pi_half.lo);
    const Vd vt = vset(t), vnsig = vset(-sigma);

    std::uint64_t n = n0;
    for (; n + 3 <= n1; n += 4) {
        Vd vn = {_mm256_setr_pd(double(n), double(n + 1), double(n + 2), double(n + 3))};
        Vdd ln = v_dd_log(vn);

        // magnitude n^-sigma from the dd log
        Vdd marg = v_dd_mul_d(ln, vnsig);
        Vd mag = v_exp(marg.hi);
        mag = vfma(mag, marg.lo, mag);

        // phase t*log n reduced mod 2pi
        Vdd phase = v_dd_mul_d(ln, vt);
        Vd k = vround(phase.hi * inv_two_pi);
        Vdd red = v_dd_add(phase, vdd_neg(v_two_prod(k, two_pi_hi)));
        red = v_dd_add_d(red, vneg(k * two_pi_lo));

        // quadrant reduction to |r| <= pi/4
        Vd k2 = vround(red.hi * vset(0.63661977236758134));
        Vdd r = v_dd_add(red, vdd_neg(v_two_prod(k2, pi2_hi)));
        r = v_dd_add_d(r, vneg(k2 * pi2_lo));

        Vd sq, cq;
        v_sincos_reduced(r.hi, r.lo, sq, cq);

        // quadrant fixup: q = k2 mod 4
        __m128i k2i = _mm256_cvtpd_epi32(k2.v);
        __m128i q = _mm_and_si128(k2i, _mm_set1_epi32(3));
        __m256i swap = _mm256_cvtepi32_epi64(_mm_cmpeq_epi32(_mm_and_si128(q, _mm_set1_epi32(1)), _mm_set1_epi32(1)));
        __m256i s_neg = _mm256_cvtepi32_epi64(_mm_cmpgt_epi32(q, _mm_set1_epi32(1)));
        __m256i c_neg = _mm256_cvtepi32_epi64(_mm_or_si128(_mm_cmpeq_epi32(q, _mm_set1_epi32(1)), _mm_cmpeq_epi32(q, _mm_set1_epi32(2))));

        const __m256d sign_bit = _mm256_set1_pd(-0.0);
        Vd sinp = {_mm256_blendv_pd(sq.v, cq.v, _mm256_castsi256_pd(swap))};
        Vd cosp = {_mm256_blendv_pd(cq.v, sq.v, _mm256_castsi256_pd(swap))};
        sinp = {_mm256_xor_pd(sinp.v, _mm256_and_pd(_mm256_castsi256_pd(s_neg), sign_bit))};
        cosp = {_mm256_xor_pd(cosp.v, _mm256_and_pd(_mm256_castsi256_pd(c_neg), sign_bit))};

        Vd term_re = mag * cosp;
        Vd term_im = vneg(mag * sinp);
        re.add(term_re);
        im.add(term_im);
        abs.add(mag);
        if (want_log_weight) {
            lw_re.add(ln.hi * term_re);
            lw_im.add(ln.hi * term_im);
        }
    }

    DirichletSums out{re.value(), im.value(), lw_re.value(), lw_im.value(), abs.value()};
    // scalar remainder (at most 3 terms)
    for (; n <= n1; ++n) {
        UnitTerm u = unit_term(sigma, t, double(n));
        out.re += u.re;
        out.im += u.im;
        out.abs += u.mag;
        if (want_log_weight) {
            out.lw_re += u.log_n * u.re;
            out.lw_im += u.log_n * u.im;
        }
    }
    return out;
}

} // namespace zmom::kernels

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "support/oracles.hpp"
#include "zmom/kernels.hpp"

using namespace zmom;
using kernels::DirichletSums;

namespace {

// long double direct evaluation, independent of the kernel machinery
DirichletSums reference(double sigma, double t, std::uint64_t n0, std::uint64_t n1) {
    std::complex<long double> sum = 0, lw = 0;
    long double abs = 0;
    for (std::uint64_t n = n0; n <= n1; ++n) {
        long double ln = logl((long double)n);
        long double mag = expl(-(long double)sigma * ln);
        std::complex<long double> term(mag * cosl((long double)t * ln), -mag * sinl((long double)t * ln));
        sum += term;
        lw += ln * term;
        abs += mag;
    }
    return {(double)sum.real(), (double)sum.imag(), (double)lw.real(), (double)lw.imag(), (double)abs};
}

struct IsaGuard {
    kernels::Isa saved;
    IsaGuard() : saved(kernels::active_isa()) {}
    ~IsaGuard() { kernels::force_isa(saved); }
};

} // namespace

TEST_CASE("scalar kernel matches a long double reference") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        double sigma = rng.uniform(-2.0, 4.0);
        double t = rng.uniform(0.0, 2000.0); // keep the ld reference's own phase error small
        std::uint64_t n1 = 2 + (std::uint64_t)(rng.next() * 400);
        auto k = kernels::dirichlet_sums_scalar(sigma, t, 1, n1, true);
        auto r = reference(sigma, t, 1, n1);
        double scale = r.abs;
        CHECK(std::fabs(k.re - r.re) <= 1e-13 * scale);
        CHECK(std::fabs(k.im - r.im) <= 1e-13 * scale);
        CHECK(std::fabs(k.lw_re - r.lw_re) <= 1e-12 * scale);
        CHECK(std::fabs(k.abs - r.abs) <= 1e-13 * scale);
    }
}

TEST_CASE("unit_term agrees with std::pow") {
    for (double n : {1.0, 2.0, 17.0, 100003.0}) {
        auto u = kernels::unit_term(0.7, 321.5, n);
        std::complex<double> ref = std::pow(std::complex<double>(n, 0.0), std::complex<double>(-0.7, -321.5));
        CHECK(std::abs(std::complex<double>(u.re, u.im) - ref) < 3e-12 * std::abs(ref)); // std::pow phase noise
    }
    auto one = kernels::unit_term(1.3, 9999.0, 1.0);
    CHECK(one.re == 1.0);
    CHECK(one.im == 0.0);
}

TEST_CASE("scalar and avx2 variants are equivalent") {
    if (!kernels::avx2_available()) {
        MESSAGE("avx2 not available on this host; skipping");
        return;
    }
    IsaGuard guard;
    testing::Rng rng(23);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        double sigma = rng.uniform(-2.0, 4.0);
        double t = rng.uniform(0.0, 1e6);
        std::uint64_t n1 = 1 + (std::uint64_t)(rng.next() * 20000);
        auto a = kernels::dirichlet_sums_scalar(sigma, t, 1, n1, true);
        kernels::force_isa(kernels::Isa::avx2);
        auto b = kernels::dirichlet_sums(sigma, t, 1, n1, true);
        double scale = a.abs > 1e-300 ? a.abs : 1.0;
        double d = std::max({std::fabs(a.re - b.re), std::fabs(a.im - b.im),
                             std::fabs(a.abs - b.abs)}) / scale;
        double dlw = std::max(std::fabs(a.lw_re - b.lw_re), std::fabs(a.lw_im - b.lw_im)) /
                     (scale * (1.0 + std::log(double(n1))));
        worst = std::max({worst, d, dlw});
    }
    // per-term few-ulp agreement between the two implementations
    CHECK(worst < 5e-14);
}

TEST_CASE("kernels are deterministic and handle empty/edge ranges") {
    auto a = kernels::dirichlet_sums(0.5, 12345.678, 1, 5000, true);
    auto b = kernels::dirichlet_sums(0.5, 12345.678, 1, 5000, true);
    CHECK(a.re == b.re);
    CHECK(a.im == b.im);
    CHECK(a.lw_re == b.lw_re);
    CHECK(a.abs == b.abs);

    auto empty = kernels::dirichlet_sums(0.5, 10.0, 5, 4, true);
    CHECK(empty.re == 0.0);
    CHECK(empty.abs == 0.0);

    auto single = kernels::dirichlet_sums(2.0, 0.0, 1, 1, false);
    CHECK(single.re == 1.0);
}

TEST_CASE("negative imaginary part conjugates the sums") {
    for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2}) {
        if (isa == kernels::Isa::avx2 && !kernels::avx2_available()) continue;
        IsaGuard guard;
        kernels::force_isa(isa);
        auto p = kernels::dirichlet_sums(0.6, 777.7, 1, 3000, false);
        auto m = kernels::dirichlet_sums(0.6, -777.7, 1, 3000, false);
        CHECK(p.re == m.re);
        CHECK(p.im == -m.im);
    }
}

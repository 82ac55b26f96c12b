#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "zmom/errors.hpp"
#include "zmom/moments.hpp"
#include "zmom/zeta.hpp"

using namespace zmom;

namespace {

const ZeroCache& cache300() {
    static const ZeroCache c = build_cache(300.0, 2);
    return c;
}

} // namespace

TEST_CASE("empty sums below the first zero") {
    auto m = moment_s(Shift(0.05, 0.0), 10.0, cache300());
    CHECK(m.value.real() == 0.0);
    CHECK(m.n_zeros == 0);
    auto d = moment_deriv(10.0, cache300());
    CHECK(d.value.real() == 0.0);
}

TEST_CASE("per-zero terms against the oracle evaluator at T = 100") {
    const auto& c = cache300();
    Shift d(0.05, 0.0);
    // term-by-term: |zeta(0.55 + i gamma)|^2 vs the oracle path
    long double oracle_sum = 0;
    std::int64_t n = 0;
    for (const auto& r : c.records) {
        if (r.gamma > 100.0) break;
        ++n;
        Cplx z = zeta({0.55, r.gamma}).value;
        Cplx o = oracle_zeta({0.55, r.gamma}, 1e-13);
        double term = std::norm(z);
        double oterm = std::norm(o);
        CHECK(std::fabs(term - oterm) <= 1e-8 * std::max(1.0, oterm));
        oracle_sum += oterm;
    }
    CHECK(n == 29);
    auto m = moment_s(d, 100.0, c);
    CHECK(m.n_zeros == 29);
    CHECK(std::fabs(m.value.real() - (double)oracle_sum) <= 1e-8 * (double)oracle_sum);
}

TEST_CASE("bilinear path equals the squared-modulus path") {
    for (Shift d : {Shift(0.05, 0.0), Shift(0.1, 0.1), Shift(-0.02, 0.5)}) {
        auto m = moment_s(d, 100.0, cache300());
        CHECK(std::fabs(m.bilinear_re - m.value.real()) <= 1e-8 * std::fabs(m.value.real()));
        // realness: imaginary residual within the modeled bound
        CHECK(std::fabs(m.value.imag()) <=
              std::max(1e-8 * std::fabs(m.value.real()), m.sum_error_estimate));
    }
}

TEST_CASE("nonnegativity and monotonicity in T") {
    Shift d(0.1, -0.3);
    double prev = -1.0;
    for (double T : {15.0, 50.0, 120.0, 200.0, 300.0}) {
        auto m = moment_s(d, T, cache300());
        CHECK(m.value.real() >= 0.0);
        CHECK(m.value.real() >= prev);
        prev = m.value.real();
    }
}

TEST_CASE("partition invariance is bitwise") {
    Shift d(0.07, 0.02);
    auto base = moment_s(d, 300.0, cache300(), 1, 1);
    for (int chunks : {2, 8}) {
        for (int threads : {1, 2}) {
            auto m = moment_s(d, 300.0, cache300(), chunks, threads);
            CHECK(m.value.real() == base.value.real());
            CHECK(m.value.imag() == base.value.imag());
            CHECK(m.bilinear_re == base.bilinear_re);
        }
    }
    auto dbase = moment_deriv(300.0, cache300(), 1, 1);
    auto d8 = moment_deriv(300.0, cache300(), 8, 2);
    CHECK(dbase.value.real() == d8.value.real());
}

TEST_CASE("derivative moment terms match finite differences of zeta") {
    const auto& c = cache300();
    for (std::size_t i = 0; i < c.records.size(); i += 5) {
        double gamma = c.records[i].gamma;
        if (gamma > 100.0) break;
        Cplx zp = zeta_prime({0.5, gamma}).value;
        Cplx fd = (zeta({0.5 + 5e-6, gamma}).value - zeta({0.5 - 5e-6, gamma}).value) / 1e-5;
        CHECK(std::abs(zp - fd) <= 1e-5 * std::abs(zp));
    }
    auto m = moment_deriv(100.0, c);
    CHECK(m.value.real() > 0.0);
    CHECK(m.n_zeros == 29);
}

TEST_CASE("gonek parameterization") {
    const auto& c = cache300();
    // alpha = 0 means delta = 0: every term is |zeta(rho)|^2, zero up to
    // certification residue
    auto m0 = moment_gonek(0.0, 300.0, c);
    CHECK(m0.value.real() >= 0.0);
    CHECK(m0.value.real() <= 1e-16);

    // definitional delegation
    double L = std::log(300.0 / (2.0 * M_PI));
    auto ma = moment_gonek(0.5, 300.0, c);
    auto md = moment_s(Shift(0.0, M_PI / L), 300.0, c);
    CHECK(ma.value.real() == md.value.real());
    CHECK(ma.value.real() > 0.0);

    CHECK_THROWS_AS(moment_gonek(10.0, 300.0, c), AlphaOutOfRange);
}

TEST_CASE("height and region errors") {
    CHECK_THROWS_AS(moment_s(Shift(0.05, 0.0), 301.0, cache300()), BeyondCertifiedHeight);
    CHECK_THROWS_AS(moment_s(Shift(3.8, 0.0), 100.0, cache300()), OutOfValidatedRegion);
    CHECK_THROWS_AS(Shift(0.0, 11.0), OutsideRegion);
}

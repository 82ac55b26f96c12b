#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "zmom/asymptotics.hpp"
#include "zmom/errors.hpp"
#include "zmom/zeta.hpp"

using namespace zmom;

TEST_CASE("cutoff threshold formula") {
    // at log T = 100: (100)^{-2/5} (log 100)^{-1/5}, recomputed independently
    double T = std::exp(100.0);
    long double expect = powl(100.0L, -0.4L) * powl(4.6051701859880913680L, -0.2L);
    CHECK(chi_threshold(T) == doctest::Approx((double)expect).epsilon(1e-12));
    CHECK(chi_threshold(T) == doctest::Approx(0.116779).epsilon(1e-4));
    // delta1 = 0.2 exceeds it: secondary terms off
    auto b = main_term(Shift(0.2, 0.0), T, CutoffRule::log_threshold);
    CHECK_FALSE(b.cutoff_active);
    CHECK(b.term_secondary_main == 0.0);
    CHECK(b.term_logderiv_minus == 0.0);
}

TEST_CASE("three active terms at delta1 = 1/2") {
    auto b = main_term(Shift(0.5, 0.0), 1e4, CutoffRule::log_threshold);
    CHECK_FALSE(b.cutoff_active);
    double three = b.term_density + b.term_logderiv_plus + b.term_cross;
    CHECK(std::fabs(b.total - three) <= 1e-12 * std::fabs(b.total));
}

TEST_CASE("conjugation invariance is exact") {
    testing::Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        double T = 150.0 * std::pow(10.0, 3.0 * rng.next());
        Shift d(rng.uniform(-0.05, 0.45), rng.uniform(-2.0, 2.0));
        if (std::fabs(d.delta1) < 1e-6) continue;
        for (auto rule : {CutoffRule::log_threshold, CutoffRule::quarter_interval}) {
            if (rule == CutoffRule::quarter_interval && !d.in_theorem_region(T)) continue;
            auto a = main_term(d, T, rule);
            auto c = main_term(d.conj(), T, rule);
            CHECK(a.total == c.total);
            CHECK(a.term_cross == c.term_cross);
        }
        if (d.in_theorem_region(T))
            CHECK(g_function(d, T).real() == g_function(d.conj(), T).real());
    }
}

TEST_CASE("the two cutoff rules give identical totals when they agree") {
    testing::Rng rng(71);
    int checked = 0;
    for (int i = 0; i < 1000 || checked < 600; ++i) {
        if (i > 5000) break;
        double T = 200.0 * std::pow(10.0, 4.0 * rng.next());
        double x = chi_threshold(T);
        double hi = std::min(0.25, x);
        double d1 = (rng.next() < 0.25) ? rng.uniform(-0.9, -0.01) / std::log(T)
                                        : rng.uniform(1e-4, hi - 1e-4);
        Shift d(d1, rng.uniform(-2.0, 2.0));
        auto b1 = main_term(d, T, CutoffRule::log_threshold);
        auto b2 = main_term(d, T, CutoffRule::quarter_interval);
        if (b1.cutoff_active != b2.cutoff_active) continue;
        ++checked;
        double scale = std::fabs(b1.term_density) + std::fabs(b1.term_logderiv_plus) +
                       std::fabs(b1.term_cross) + std::fabs(b1.term_logderiv_minus) +
                       std::fabs(b1.term_secondary_main);
        CHECK(std::fabs(b1.total - b2.total) <= 1e-12 * scale);
    }
    CHECK(checked >= 600);
}

TEST_CASE("breakdown total always equals the term sum") {
    testing::Rng rng(73);
    for (int i = 0; i < 300; ++i) {
        double T = 120.0 * std::pow(10.0, 4.0 * rng.next());
        Shift d(rng.uniform(-0.5, 1.2) * chi_threshold(T), rng.uniform(-3.0, 3.0));
        if (std::fabs(d.delta1) < 1e-7) continue;
        auto b = main_term(d, T, CutoffRule::log_threshold);
        double sum = ((b.term_density + b.term_logderiv_plus) +
                      (b.term_cross + b.term_logderiv_minus)) +
                     b.term_secondary_main;
        CHECK(b.total == sum);
    }
}

TEST_CASE("independent transliteration of the five-term formula") {
    // oracle-zeta-based re-derivation, including the spec's (0.26, 0.1) point
    struct Pt {
        double d1, d2, T;
    } pts[] = {{0.26, 0.1, 1e4}, {0.05, 0.0, 1e4}, {0.1, -0.3, 2e3}, {-0.05, 0.2, 1e5}, {0.3, 1.5, 1e4}};
    for (auto [d1, d2, T] : pts) {
        double mine = main_term(Shift(d1, d2), T, CutoffRule::quarter_interval).total;
        double ref = testing::independent_five_term_total(d1, d2, T, 1.0);
        CHECK(std::fabs(mine - ref) <= 2e-6 * (std::fabs(mine) + std::fabs(ref) + T));
    }
}

TEST_CASE("limit mode matches the +-1e-7 average") {
    for (double d2 : {0.3, 1.0, -1.7}) {
        for (double T : {1e3, 1e4, 1e6}) {
            auto lim = main_term(Shift(0.0, d2), T, CutoffRule::log_threshold, true);
            auto p = main_term(Shift(1e-7, d2), T, CutoffRule::log_threshold);
            auto m = main_term(Shift(-1e-7, d2), T, CutoffRule::log_threshold);
            double avg = 0.5 * (p.total + m.total);
            CHECK(std::fabs(lim.total - avg) <= 1e-4 * std::fabs(avg));
            CHECK(lim.cutoff_active);
            CHECK(lim.term_secondary_main == 0.0);
        }
    }
    CHECK_THROWS_AS(main_term(Shift(1e-9, 0.5), 1e4, CutoffRule::log_threshold), PoleUncancelled);
    CHECK_THROWS_AS(main_term(Shift(0.0, 1e-8), 1e4, CutoffRule::log_threshold, true), PoleUncancelled);
}

TEST_CASE("quadratic main term") {
    CHECK(main_term_quadratic(Shift(0.0, 0.0), 1e4) == 0.0);
    // independently recomputed: (1e-4/12)(1e4/2pi) ln^4(1e4)
    long double lt = logl(10000.0L);
    long double expect = 1e-4L / 12.0L * (10000.0L / (2.0L * 3.14159265358979323846L)) * lt * lt * lt * lt;
    CHECK(main_term_quadratic(Shift(0.01, 0.0), 1e4) ==
          doctest::Approx((double)expect).epsilon(1e-14));
    CHECK((double)expect == doctest::Approx(95.44).epsilon(1e-4));
    // exact degree-2 scaling: 4x the shift gives exactly 16x the value
    Shift d(0.003, -0.004);
    Shift d4(4.0 * d.delta1, 4.0 * d.delta2);
    CHECK(main_term_quadratic(d4, 1e4) == 16.0 * main_term_quadratic(d, 1e4));
}

TEST_CASE("gonek main term") {
    CHECK(main_term_gonek(0.0, 1e4) == 0.0);
    double lt = std::log(1e4);
    CHECK(main_term_gonek(1.0, 1e4) ==
          doctest::Approx(1e4 / (2.0 * M_PI) * lt * lt).epsilon(1e-13));
    // alpha = 1/2: (1 - (2/pi)^2) (T/2pi) log^2 T, recomputed in long double
    long double pi = 3.14159265358979323846L;
    long double expect = (1.0L - powl(2.0L / pi, 2.0L)) * (10000.0L / (2.0L * pi)) * logl(1e4L) * logl(1e4L);
    CHECK(main_term_gonek(0.5, 1e4) == doctest::Approx((double)expect).epsilon(1e-13));
    CHECK_THROWS_AS(main_term_gonek(5.0, 1e4), AlphaOutOfRange);
}

TEST_CASE("g function consistency with the quarter-rule main term") {
    testing::Rng rng(79);
    for (int i = 0; i < 100; ++i) {
        double T = 200.0 * std::pow(10.0, 4.0 * rng.next());
        Shift d(rng.uniform(0.001, 0.45), rng.uniform(-2.0, 2.0));
        if (!d.in_theorem_region(T)) continue;
        auto b = main_term(d, T, CutoffRule::quarter_interval);
        double via_g = g_function(d, T).real() * T / (2.0 * M_PI);
        double scale = std::fabs(b.term_density) + std::fabs(b.term_logderiv_plus) +
                       std::fabs(b.term_cross) + std::fabs(b.term_logderiv_minus) +
                       std::fabs(b.term_secondary_main);
        CHECK(std::fabs(via_g - b.total) <= 1e-12 * scale);
    }
    // positivity in the small-shift zone
    CHECK(g_function(Shift(0.05, 0.0), 1e4).real() > 0.0);
}

TEST_CASE("g expansion residuals") {
    // spec anchor: delta = 1e-3 (1+i)/sqrt2, T = 1e6
    Shift d(1e-3 / std::sqrt(2.0), 1e-3 / std::sqrt(2.0));
    auto res = g_expansion_check(d, 1e6);
    CHECK(std::isfinite(res.r));
    CHECK(res.r <= 20.0);
    // conjugation invariance of the residual
    auto resc = g_expansion_check(d.conj(), 1e6);
    CHECK(res.r == resc.r);
    // limit mode at delta1 = 0 against nearby real parts
    Shift dl(0.0, 5e-4);
    auto rl = g_expansion_check(dl, 1e6, true);
    CHECK(std::isfinite(rl.r));
    CHECK(rl.r <= 20.0);
    CHECK_THROWS_AS(g_expansion_check(Shift(0.5, 0.5), 1e6), OutsideExpansionZone);
}

TEST_CASE("dominance region") {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(0.075 * i);
    for (double T : {1e4, 1e6, 1e8}) {
        int checked = 0;
        double eps0 = dominance_region(T, grid, &checked, 4);
        CHECK(eps0 > 0.0);
        // doubling the sampling density cannot grow the region
        double eps0_dense = dominance_region(T, grid, nullptr, 8);
        CHECK(eps0_dense <= eps0);
    }
    // direct small-shift check of the lower bound itself
    double T = 1e6;
    double mag = 0.01 / std::log(T);
    double lt4 = std::pow(std::log(T), 4.0);
    double re_g = g_function(Shift(mag * 0.8, mag * 0.6), T).real();
    CHECK(re_g >= mag * mag * lt4 / 24.0);
    CHECK_THROWS_AS(dominance_region(1e6, {}), EmptyGrid);
}

TEST_CASE("error envelope") {
    // the paper's constant
    CHECK(kEnvelopeA == 1.0 / 230.16);
    CHECK(kEnvelopeA == doctest::Approx(0.0043448).epsilon(1e-4));
    // case ordering at the boundary
    for (double T : {1e6, 1e9, 1e12}) {
        double x = chi_threshold(T);
        double e_above = error_envelope(x * (1.0 + 1e-9), T);
        double e_below = error_envelope(x, T);
        CHECK(e_above <= e_below);
    }
    // E(T)/T decreasing along the grid at fixed delta1 = 0.3
    double prev = 1.0;
    for (double T : {1e6, 1e9, 1e12}) {
        double ratio = error_envelope(0.3, T) / T;
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK_THROWS_AS(error_envelope(0.9, 1e6), OutsideRegion);
}

TEST_CASE("regime classification") {
    // |delta| sqrt T log^2 T -> 0 proxy: delta = T^{-1/2}/log^3 T at huge T
    double T = std::exp(120.0);
    double d = 1.0 / (std::sqrt(T) * std::pow(120.0, 3.0));
    auto r1 = classify_regime(Shift(d, 0.0), T);
    CHECK(r1.small_condition);
    CHECK_FALSE(r1.gap_zone);

    auto r2 = classify_regime(Shift(0.3, 0.0), 1e4);
    CHECK(r2.large_condition);
    CHECK_FALSE(r2.gap_zone);
    CHECK(r2.chi == 0);
    CHECK_FALSE(r2.indicator_quarter);

    double T3 = 1e10;
    auto r3 = classify_regime(Shift(std::pow(T3, -0.4), 0.0), T3);
    CHECK(r3.gap_zone);
    CHECK_FALSE(r3.small_condition);
    CHECK_FALSE(r3.large_condition);
    CHECK(r3.chi == 1);
    CHECK(r3.indicator_quarter);
}

TEST_CASE("section-2 chain audit") {
    auto rep = audit_section2({1e6, 1e9, 1e12}, {});
    for (const auto& s : rep.steps) {
        if (s.literal) CHECK(s.ok);
    }
    CHECK(rep.pass);
    CHECK(rep.worst_fitted <= 1e3);
    // every grid point routed to exactly one case family
    int case1 = 0, case2 = 0;
    for (const auto& s : rep.steps) {
        if (s.id == "case1.t_main") ++case1;
        if (s.id == "case2.t_main") ++case2;
    }
    CHECK(case1 > 0);
    CHECK(case2 > 0);
    CHECK_THROWS_AS(audit_section2({1e5}, {}), OutsideRegion);
}

TEST_CASE("region preconditions") {
    CHECK_THROWS_AS(main_term(Shift(0.7, 0.0), 1e4, CutoffRule::quarter_interval), OutsideRegion);
    CHECK_THROWS_AS(g_function(Shift(-0.3, 0.0), 1e4), OutsideRegion);
    CHECK_THROWS_AS(main_term(Shift(0.1, 0.0), 50.0, CutoffRule::log_threshold), OutsideRegion);
}

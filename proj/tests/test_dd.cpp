#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "zmom/dd.hpp"
#include "zmom/exact_acc.hpp"

using namespace zmom;

TEST_CASE("error-free transforms are exact") {
    testing::Rng rng(7);
    for (int i = 0; i < 20000; ++i) {
        double a = (rng.next() - 0.5) * std::exp(rng.uniform(-20, 20));
        double b = (rng.next() - 0.5) * std::exp(rng.uniform(-20, 20));
        Dd s = two_sum(a, b);
        CHECK((long double)s.hi + s.lo == (long double)a + b);
        Dd p = two_prod(a, b);
        CHECK((long double)p.hi + p.lo == (long double)a * b);
    }
}

TEST_CASE("dd_log matches long double and its own identities") {
    testing::Rng rng(11);
    long double worst = 0;
    for (int i = 0; i < 5000; ++i) {
        double x = std::exp(rng.uniform(-6, 14));
        Dd l = dd_log(x);
        worst = std::max(worst, fabsl(((long double)l.hi + l.lo) - logl((long double)x)));
    }
    CHECK(worst < 2e-18); // limited by the long double reference itself

    // multiplicativity at dd accuracy: log(x*y) = log x + log y
    long double worst_id = 0;
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(1.0, 3.0), y = rng.uniform(1.0, 3.0);
        Dd lx = dd_log(x), ly = dd_log(y), lxy = dd_log(x * y);
        // x*y rounds; compensate with the product error term, in dd
        Dd err = two_prod(x, y);
        Dd lhs = dd_add(lxy, err.lo / err.hi);
        Dd rhs = dd_add(lx, ly);
        worst_id = std::max(worst_id, (long double)std::fabs(dd_to_double(dd_sub(lhs, rhs))));
    }
    CHECK(worst_id < 1e-27);
}

TEST_CASE("reduction mod 2pi keeps sub-ulp phase information") {
    // t*log n near a huge multiple of 2pi: plain double would lose the bits
    double t = 987654.0;
    for (double n : {2.0, 99991.0, 500011.0}) {
        Dd phase = dd_mul(dd_log(n), t);
        Dd red = dd_reduce_two_pi(phase);
        long double ref = fmodl((long double)phase.hi + phase.lo, 2.0L * 3.14159265358979323846264338328L);
        if (ref > 3.14159265358979323846L) ref -= 2.0L * 3.14159265358979323846264338328L;
        if (ref < -3.14159265358979323846L) ref += 2.0L * 3.14159265358979323846264338328L;
        CHECK(fabsl(((long double)red.hi + red.lo) - ref) < 5e-12); // ld fmod noise dominates
        CHECK(std::fabs(red.hi) <= 3.1416);
    }
}

TEST_CASE("dd_atan_small agrees with atanl") {
    for (double x : {1e-8, 1e-4, 0.01, 0.1, 0.2, 0.249}) {
        Dd a = dd_atan_small(Dd{x, 0.0});
        CHECK(fabsl(((long double)a.hi + a.lo) - atanl((long double)x)) < 1e-18);
    }
}

TEST_CASE("exact accumulator: exactness, cancellation, partition invariance") {
    testing::Rng rng(3);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = (rng.next() - 0.5) * std::exp(rng.uniform(-40, 40));

    ExactAcc whole;
    for (double x : xs) whole.add(x);
    const double reference = whole.finalize();

    // any partitioning merges to the bitwise-identical result
    for (int parts : {2, 3, 8, 64, 999}) {
        std::vector<ExactAcc> accs(parts);
        for (std::size_t i = 0; i < xs.size(); ++i) accs[(i * 2654435761u) % parts].add(xs[i]);
        ExactAcc merged;
        for (auto& a : accs) merged.merge(a);
        CHECK(merged.finalize() == reference);
    }

    // massive cancellation leaves the exact residue
    ExactAcc c;
    c.add(1e308);
    c.add(-1e308);
    c.add(1.0);
    c.add(0x1p-1000);
    c.add(-0x1p-1000);
    CHECK(c.finalize() == 1.0);

    // exact integer check
    ExactAcc ints;
    long long ref = 0;
    for (int i = 0; i < 10000; ++i) {
        long long v = (long long)(rng.uniform(-1e15, 1e15));
        ints.add(double(v));
        ref += v;
    }
    CHECK(ints.finalize() == double(ref));
}

TEST_CASE("exact accumulator handles subnormals and extremes") {
    ExactAcc a;
    a.add(5e-324);
    a.add(5e-324);
    CHECK(a.finalize() == 1e-323);
    ExactAcc b;
    b.add(1.7976931348623157e308);
    b.add(-1.7976931348623157e308);
    CHECK(b.finalize() == 0.0);
}

// Data-parallel inner-loop kernels.
//
// The single hot loop of the whole artifact is the truncated Dirichlet sum
//   sum_{n=n0..n1} n^-sigma * exp(-i t log n)
// (the Euler-Maclaurin main sum; the Riemann-Siegel main sum is the same
// kernel at sigma = 1/2 wrapped in a phase factor). Phases t*log(n) are
// carried in double-double so the reduction mod 2pi stays accurate for t up
// to 1e6.
//
// A scalar reference kernel always exists; an AVX2+FMA variant is selected
// at runtime when the CPU supports it. Both implement the same algorithm and
// are equivalence-tested against each other.
#pragma once

#include <cstdint>
#include <string>

namespace zmom::kernels {

struct DirichletSums {
    double re = 0.0;     // Re sum n^-s
    double im = 0.0;     // Im sum n^-s
    double lw_re = 0.0;  // Re sum (log n) n^-s
    double lw_im = 0.0;  // Im sum (log n) n^-s
    double abs = 0.0;    // sum n^-sigma  (error-model weight)
};

enum class Isa { scalar, avx2 };

// Active implementation; detection runs once, force() overrides (tests).
Isa active_isa();
void force_isa(Isa isa);
bool avx2_available();
std::string isa_name(Isa isa);

// Dispatched entry point. n0 >= 1, inclusive bounds; n1 < n0 yields zeros.
DirichletSums dirichlet_sums(double sigma, double t, std::uint64_t n0, std::uint64_t n1, bool want_log_weight);

// Scalar reference implementation (exposed for equivalence tests; the AVX2
// variant is reached by force_isa(Isa::avx2) + dirichlet_sums).
DirichletSums dirichlet_sums_scalar(double sigma, double t, std::uint64_t n0, std::uint64_t n1, bool want_log_weight);

// One term n^-s = a*(cos phi, -sin phi), phi = t log n reduced mod 2pi.
// Shared by the scalar kernel and by Euler-Maclaurin tail evaluation.
struct UnitTerm {
    double re, im;
    double mag;    // n^-sigma
    double log_n;  // double-rounded log n
};
UnitTerm unit_term(double sigma, double t, double n);

} // namespace zmom::kernels

// Runtime ISA selection for the Dirichlet-sum kernel.

#include <atomic>

#include "zmom/kernels.hpp"

#if defined(ZMOM_HAVE_AVX2_TU)
namespace zmom::kernels {
DirichletSums dirichlet_sums_avx2(double, double, std::uint64_t, std::uint64_t, bool);
}
#endif

namespace zmom::kernels {

namespace {

bool detect_avx2() {
#if defined(ZMOM_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<Isa>& isa_state() {
    static std::atomic<Isa> s{detect_avx2() ? Isa::avx2 : Isa::scalar};
    return s;
}

} // namespace

bool avx2_available() { return detect_avx2(); }

Isa active_isa() { return isa_state().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !detect_avx2()) isa = Isa::scalar;
    isa_state().store(isa, std::memory_order_relaxed);
}

std::string isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

DirichletSums dirichlet_sums(double sigma, double t, std::uint64_t n0, std::uint64_t n1, bool want_log_weight) {
    if (n1 < n0) return {};
#if defined(ZMOM_HAVE_AVX2_TU)
    if (active_isa() == Isa::avx2) return dirichlet_sums_avx2(sigma, t, n0, n1, want_log_weight);
#endif
    return dirichlet_sums_scalar(sigma, t, n0, n1, want_log_weight);
}

} // namespace zmom::kernels

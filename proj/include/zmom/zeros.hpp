// Locating, refining, certifying and persisting nontrivial-zero ordinates,
// plus the Riemann-von Mangoldt count audit.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zmom {

struct ZeroRecord {
    std::uint64_t index = 0; // 1-based rank by height
    double gamma = 0.0;      // canonicalized to 15 significant digits
    double err_bound = 0.0;  // absolute uncertainty, <= 1e-9 after refinement
};

struct ZeroCache {
    double t_max_certified = 0.0;
    int format_version = 1;
    std::vector<ZeroRecord> records;
};

// Height of the n-th Gram point (theta(g_n) = n pi), n >= -1.
double gram_point(std::int64_t n);

// Sign-change brackets of Z in (t_lo, t_hi). Each bracket contains exactly
// one sign change at scan resolution; missed zeros are the audit's job.
std::vector<std::pair<double, double>> scan_zeros(double t_lo, double t_hi);

// Bisection+secant refinement of a certified sign-change bracket.
// Throws LostBracket when certification-grade signs at the ends agree.
ZeroRecord refine_zero(double bracket_lo, double bracket_hi);

// Scan + refine + audit pipeline up to t_max.
ZeroCache build_cache(double t_max, int threads = 0);

// Exact count of cached zeros with gamma <= T.
std::int64_t count_zeros(double T, const ZeroCache& cache);

// (T/2pi) log(T/(2 pi e)) + 7/8
double smooth_zero_count(double T);

struct AuditReport {
    bool pass = false;
    double worst_margin = 0.0;
    double worst_height = 0.0;
    std::int64_t checkpoints = 0;
    std::int64_t located = 0;
};

// Turing-style completeness audit: located counts vs the smooth term with
// |S(T)| <= 2 slack, on a mesh of checkpoints up to T.
AuditReport audit_completeness(double T, const ZeroCache& cache);

// CSV cache (format: header, one record per line, trailing metadata line).
// With sidecar=true an additional binary file <path>.bin is written.
void save_cache(const ZeroCache& cache, const std::string& path, bool binary_sidecar = false);
ZeroCache load_cache(const std::string& path);

// Round to 15 significant digits through the decimal representation (the
// cache canonical form, applied once at record creation).
double canonical15(double x);

} // namespace zmom

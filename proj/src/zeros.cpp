// Zero location pipeline.
//
// Scanning walks Gram cells with the fast Z evaluator and adaptive dyadic
// subdivision (up to 64 points per cell). Refinement and certification use
// the Euler-Maclaurin-grade evaluator only: the scanning path's ~1e-7-grade
// accuracy near its crossover is fine for sign hunting but not for the
// +-1e-9 sign-change certificate (close pairs like the one at t ~ 7005 leave
// |Z| ~ 3e-11 at that offset).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "zmom/errors.hpp"
#include "zmom/parallel.hpp"
#include "zmom/zeros.hpp"
#include "zmom/zeta.hpp"

namespace zmom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kCertOffset = 1e-9;

double theta_minus_npi(double t, std::int64_t n) {
    Dd th = theta_dd(t);
    Dd npi = dd_add(two_prod(double(n), ddc::pi.hi), double(n) * ddc::pi.lo);
    return dd_to_double(dd_sub(th, npi));
}

int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

} // namespace

double canonical15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

double gram_point(std::int64_t n) {
    if (n < -1) throw OutOfValidatedRegion("gram_point requires n >= -1");
    // theta is increasing on (2pi, inf); bracket the unique root there
    double lo = 6.32;
    double hi = std::max(12.0, kTwoPi * (double(n) + 2.0));
    while (theta_minus_npi(hi, n) < 0) {
        lo = hi;
        hi *= 1.5;
        if (hi > 1e7) throw NoConvergence("gram_point bracket expansion failed");
    }
    double g = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        double f = theta_minus_npi(g, n);
        if (std::fabs(f) <= 1e-11) return g;
        if (f > 0)
            hi = g;
        else
            lo = g;
        double dtheta = 0.5 * std::log(g / kTwoPi);
        double step = f / dtheta;
        double cand = g - step;
        g = (cand > lo && cand < hi) ? cand : 0.5 * (lo + hi);
    }
    throw NoConvergence("gram_point Newton did not converge in 50 iterations");
}

namespace {

// Collect sign-change subintervals of a cell at 2^level points.
void scan_cell(double x, double y, double zx, double zy,
               const std::function<double(double)>& zeval,
               std::vector<std::pair<double, double>>& out) {
    int sx = sgn(zx), sy = sgn(zy);
    auto collect_at_level = [&](int level, std::vector<std::pair<double, double>>& found) {
        found.clear();
        int m = 1 << level;
        double prev_t = x, prev_z = zx;
        for (int i = 1; i <= m; ++i) {
            double ti = (i == m) ? y : x + (y - x) * double(i) / double(m);
            double zi = (i == m) ? zy : zeval(ti);
            if (sgn(prev_z) != 0 && sgn(zi) != 0 && sgn(prev_z) != sgn(zi))
                found.emplace_back(prev_t, ti);
            else if (sgn(zi) == 0) // exact zero hit: tiny symmetric bracket
                found.emplace_back(ti - 1e-7 * (y - x), ti + 1e-7 * (y - x));
            prev_t = ti;
            prev_z = zi;
        }
    };
    std::vector<std::pair<double, double>> found;
    if (sx != sy) {
        collect_at_level(3, found);
    } else {
        for (int level = 1; level <= 6; ++level) {
            collect_at_level(level, found);
            if (found.size() >= 2) break;
        }
        if (found.size() < 2) found.clear(); // treat as no zeros; audit re-checks
    }
    for (auto& b : found) out.push_back(b);
}

std::vector<std::pair<double, double>> scan_range(double t_lo, double t_hi,
                                                  const std::function<double(double)>& zeval) {
    std::vector<std::pair<double, double>> out;
    if (!(t_hi > t_lo)) return out;
    double lo = std::max(t_lo, 4.0);
    if (!(t_hi > lo)) return out;

    // grid: lo, gram points inside, hi
    std::vector<double> grid{lo};
    if (t_hi > 9.0) {
        std::int64_t n = -1;
        if (lo > 7.0) n = static_cast<std::int64_t>(std::ceil(theta(lo) / M_PI));
        for (;; ++n) {
            double g = gram_point(n);
            if (g >= t_hi) break;
            if (g > lo + 1e-12) grid.push_back(g);
        }
    }
    grid.push_back(t_hi);

    double prev_t = grid[0], prev_z = zeval(prev_t);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        double ti = grid[i], zi = zeval(ti);
        scan_cell(prev_t, ti, prev_z, zi, zeval, out);
        prev_t = ti;
        prev_z = zi;
    }
    return out;
}

} // namespace

std::vector<std::pair<double, double>> scan_zeros(double t_lo, double t_hi) {
    if (!(t_lo >= 2.0)) throw DomainTooSmall("scan_zeros requires 2 <= t_lo");
    if (t_hi < t_lo) throw OutOfValidatedRegion("scan_zeros requires t_lo <= t_hi");
    return scan_range(t_lo, t_hi, [](double t) { return hardy_z_fast(t); });
}

ZeroRecord refine_zero(double bracket_lo, double bracket_hi) {
    if (!(bracket_hi > bracket_lo)) throw LostBracket("empty bracket");
    double a = bracket_lo, b = bracket_hi;
    double fa = hardy_z_accurate(a), fb = hardy_z_accurate(b);
    if (sgn(fa) == 0) {
        a = std::nextafter(a, 0.0);
        fa = hardy_z_accurate(a);
    }
    if (sgn(fa) * sgn(fb) >= 0) throw LostBracket("no certified sign change across bracket");

    // coarse fast-path bisection while the interval is wide
    while (b - a > 1e-3) {
        double m = 0.5 * (a + b);
        double fm = (m > 200.0 && b - a > 2e-3) ? hardy_z_fast(m) : hardy_z_accurate(m);
        if (sgn(fm) == 0) break;
        if (sgn(fm) == sgn(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    // re-certify ends after the fast phase
    fa = hardy_z_accurate(a);
    fb = hardy_z_accurate(b);
    if (sgn(fa) * sgn(fb) >= 0) throw LostBracket("fast-phase bisection lost the sign change");

    // accurate bisection/secant polish
    for (int it = 0; it < 80 && b - a > 5e-12; ++it) {
        double m;
        double denom = fb - fa;
        if (denom != 0.0) {
            m = a - fa * (b - a) / denom; // secant through the bracket
            double margin = 0.05 * (b - a);
            if (!(m > a + margin && m < b - margin)) m = 0.5 * (a + b);
        } else {
            m = 0.5 * (a + b);
        }
        double fm = hardy_z_accurate(m);
        if (sgn(fm) == 0) {
            a = m - 1e-12;
            b = m + 1e-12;
            break;
        }
        if (sgn(fm) == sgn(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }

    ZeroRecord rec;
    rec.gamma = canonical15(0.5 * (a + b));
    double zc = hardy_z_accurate(rec.gamma);
    double zlo = hardy_z_accurate(rec.gamma - kCertOffset);
    double zhi = hardy_z_accurate(rec.gamma + kCertOffset);
    if (sgn(zlo) * sgn(zhi) >= 0)
        throw LostBracket("sign-change certificate at +-1e-9 failed");
    if (std::fabs(zc) > 1e-6)
        throw LostBracket("residual |Z(gamma)| exceeds certification threshold");
    double zlo10 = hardy_z_accurate(rec.gamma - 1e-10);
    double zhi10 = hardy_z_accurate(rec.gamma + 1e-10);
    rec.err_bound = (sgn(zlo10) * sgn(zhi10) < 0) ? 1e-10 : 1e-9;
    rec.index = 0; // assigned at cache assembly
    return rec;
}

double smooth_zero_count(double T) {
    if (T <= 0.0) return 0.875;
    double x = T / kTwoPi;
    return x * std::log(x / M_E) + 0.875;
}

std::int64_t count_zeros(double T, const ZeroCache& cache) {
    if (T > cache.t_max_certified * (1.0 + 1e-12))
        throw BeyondCertifiedHeight("count_zeros beyond certified height");
    auto it = std::upper_bound(cache.records.begin(), cache.records.end(), T,
                               [](double v, const ZeroRecord& r) { return v < r.gamma; });
    return static_cast<std::int64_t>(it - cache.records.begin());
}

AuditReport audit_completeness(double T, const ZeroCache& cache) {
    if (cache.t_max_certified * (1.0 + 1e-12) < T)
        throw BeyondCertifiedHeight("audit_completeness beyond cached height");
    AuditReport rep;
    rep.located = count_zeros(T, cache);
    std::vector<double> mesh;
    if (T >= 18.0) {
        std::int64_t n_max = static_cast<std::int64_t>(std::floor(theta(T) / M_PI));
        for (std::int64_t n = 0; n <= n_max; n += 10) mesh.push_back(gram_point(n));
    }
    for (double h : {100.0, 500.0, 1000.0, 5000.0, 10000.0})
        if (h <= T) mesh.push_back(h);
    mesh.push_back(T);
    rep.pass = true;
    for (double h : mesh) {
        double margin = std::fabs(double(count_zeros(h, cache)) - smooth_zero_count(h));
        if (margin > rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_height = h;
        }
        if (margin > 2.0) rep.pass = false;
    }
    rep.checkpoints = static_cast<std::int64_t>(mesh.size());
    return rep;
}

ZeroCache build_cache(double t_max, int threads) {
    if (threads <= 0) threads = default_threads();
    ZeroCache cache;
    cache.t_max_certified = t_max;
    if (t_max < 14.0) return cache;

    // gram-aligned cells so chunking cannot change evaluation points
    std::vector<double> grid{4.0};
    {
        std::int64_t n = -1;
        for (;; ++n) {
            double g = gram_point(n);
            if (g >= t_max) break;
            grid.push_back(g);
        }
    }
    grid.push_back(t_max);

    struct Partial {
        std::vector<ZeroRecord> recs;
    };
    const std::size_t n_cells = grid.size() - 1;
    int n_chunks = std::max(threads * 4, 1);
    auto scan_with = [&](double x, double y, bool accurate) {
        return scan_range(x, y, [accurate](double t) {
            return accurate ? hardy_z_accurate(t) : hardy_z_fast(t);
        });
    };
    auto partials = run_chunked<Partial>(0, n_cells, n_chunks, threads,
                                         [&](int, std::size_t lo, std::size_t hi, Partial& part) {
        for (std::size_t c = lo; c < hi; ++c) {
            auto brackets = scan_with(grid[c], grid[c + 1], false);
            for (auto [bl, bh] : brackets) {
                try {
                    part.recs.push_back(refine_zero(bl, bh));
                } catch (const LostBracket&) {
                    // scanning-path sign glitch: redo this cell accurately
                    auto redo = scan_with(grid[c], grid[c + 1], true);
                    for (auto [rl, rh] : redo) {
                        try {
                            part.recs.push_back(refine_zero(rl, rh));
                        } catch (const LostBracket&) {
                        }
                    }
                    break;
                }
            }
        }
    });

    for (auto& p : partials)
        for (auto& r : p.recs) cache.records.push_back(r);
    std::sort(cache.records.begin(), cache.records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
    // dedup cell-boundary double detections (distinct zeros are never this close)
    std::vector<ZeroRecord> unique;
    for (const auto& r : cache.records) {
        if (!unique.empty() && std::fabs(r.gamma - unique.back().gamma) < 1e-6) continue;
        unique.push_back(r);
    }
    cache.records = std::move(unique);
    for (std::size_t i = 0; i < cache.records.size(); ++i) cache.records[i].index = i + 1;

    auto rep = audit_completeness(t_max, cache);
    if (!rep.pass)
        throw AuditFailed("zero-count audit failed after scan", rep.worst_height);
    return cache;
}

} // namespace zmom

// Batch empirical-vs-predicted comparisons and their CSV form.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zmom/moments.hpp"
#include "zmom/shift.hpp"
#include "zmom/zeros.hpp"

namespace zmom {

struct SweepConfig {
    std::vector<Shift> delta_list;
    std::vector<double> t_checkpoints; // ascending, all <= certified height
    std::vector<std::string> formulas; // exactly one of eq3|thm2|quadratic|gonek
    std::string output_path;
    std::string cache_path;
    int threads = 0;
};

struct ComparisonRow {
    double delta1 = 0.0, delta2 = 0.0, T = 0.0;
    double empirical = 0.0, predicted = 0.0, ratio = 0.0;
    bool ratio_null = true;
    std::string regime;
    std::int64_t n_zeros = 0;
    std::string reason; // empty for clean rows
};

// Rows in delta-major, T-minor order. Row-level failures are recorded in
// reason and do not abort the sweep. For the gonek formula delta1 carries
// the alpha parameter.
std::vector<ComparisonRow> run_sweep(const SweepConfig& config, const ZeroCache& cache);

void write_rows_csv(const std::vector<ComparisonRow>& rows, const std::string& path);
std::vector<ComparisonRow> read_rows_csv(const std::string& path);

} // namespace zmom

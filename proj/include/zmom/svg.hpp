// Self-contained SVG chart of ratio vs T (log axis) or vs |delta|,
// one polyline per distinct shift, dashed reference line at ratio 1.
#pragma once

#include <string>
#include <vector>

#include "zmom/sweep.hpp"

namespace zmom {

enum class PlotAxis { T, abs_delta };

std::string render_ratio_plot(const std::vector<ComparisonRow>& rows, PlotAxis axis);

} // namespace zmom

// Static SVG emission; string building only, no drawing dependency.

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "zmom/format.hpp"
#include "zmom/svg.hpp"

namespace zmom {

namespace {

constexpr double kW = 640, kH = 420;
constexpr double kL = 70, kR = 20, kTm = 20, kB = 50;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_ratio_plot(const std::vector<ComparisonRow>& rows, PlotAxis axis) {
    const bool log_x = (axis == PlotAxis::T);
    struct Pt {
        double x, y;
    };
    // series keyed by shift, in first-appearance order
    std::vector<std::pair<std::string, std::vector<Pt>>> series;
    std::map<std::string, std::size_t> idx;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& r : rows) {
        if (r.ratio_null || !r.reason.empty()) continue;
        double x = (axis == PlotAxis::T) ? r.T : std::hypot(r.delta1, r.delta2);
        if (log_x) {
            if (!(x > 0)) continue;
            x = std::log10(x);
        }
        std::string key = fmt15(r.delta1) + "," + fmt15(r.delta2);
        auto it = idx.find(key);
        if (it == idx.end()) {
            it = idx.emplace(key, series.size()).first;
            series.push_back({key, {}});
        }
        series[it->second].second.push_back({x, r.ratio});
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, r.ratio);
        ymax = std::max(ymax, r.ratio);
    }
    if (series.empty()) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 2;
    }
    ymin = std::min(ymin, 1.0);
    ymax = std::max(ymax, 1.0);
    double xpad = (xmax - xmin) * 0.05 + 1e-9, ypad = (ymax - ymin) * 0.08 + 1e-9;
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;
    auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kW - kL - kR); };
    auto py = [&](double y) { return kH - kB - (y - ymin) / (ymax - ymin) * (kH - kTm - kB); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    s << "<path d=\"M " << coord(kL) << " " << coord(kTm) << " L " << coord(kL) << " "
      << coord(kH - kB) << " L " << coord(kW - kR) << " " << coord(kH - kB)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // x ticks
    int nticks = 6;
    for (int i = 0; i <= nticks; ++i) {
        double xv = xmin + (xmax - xmin) * i / nticks;
        double X = px(xv);
        s << "<path d=\"M " << coord(X) << " " << coord(kH - kB) << " l 0 5\" stroke=\"black\"/>\n";
        std::ostringstream lab;
        if (log_x) {
            lab << "1e" << coord(xv);
        } else {
            char b[32];
            std::snprintf(b, sizeof b, "%.3g", xv);
            lab << b;
        }
        s << "<text x=\"" << coord(X) << "\" y=\"" << coord(kH - kB + 18)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << lab.str() << "</text>\n";
    }
    // y ticks
    for (int i = 0; i <= 5; ++i) {
        double yv = ymin + (ymax - ymin) * i / 5;
        double Y = py(yv);
        char b[32];
        std::snprintf(b, sizeof b, "%.3g", yv);
        s << "<path d=\"M " << coord(kL - 5) << " " << coord(Y) << " l 5 0\" stroke=\"black\"/>\n";
        s << "<text x=\"" << coord(kL - 8) << "\" y=\"" << coord(Y + 4)
          << "\" font-size=\"11\" text-anchor=\"end\">" << b << "</text>\n";
    }
    s << "<text x=\"" << coord((kL + kW - kR) / 2) << "\" y=\"" << coord(kH - 12)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << (log_x ? "T (log10)" : "|delta|")
      << "</text>\n";
    s << "<text x=\"14\" y=\"" << coord((kTm + kH - kB) / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << coord((kTm + kH - kB) / 2) << ")\">empirical / predicted</text>\n";
    // reference line at ratio 1
    s << "<line x1=\"" << coord(kL) << "\" y1=\"" << coord(py(1.0)) << "\" x2=\"" << coord(kW - kR)
      << "\" y2=\"" << coord(py(1.0))
      << "\" stroke=\"#333333\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
    // series
    for (std::size_t i = 0; i < series.size(); ++i) {
        auto pts = series[i].second;
        std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
        s << "<polyline fill=\"none\" stroke=\"" << kPalette[i % 8] << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : pts) s << coord(px(p.x)) << "," << coord(py(p.y)) << " ";
        s << "\"/>\n";
        s << "<text x=\"" << coord(kW - kR - 4) << "\" y=\"" << coord(kTm + 14 + 14 * double(i))
          << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << kPalette[i % 8] << "\">delta="
          << series[i].first << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace zmom

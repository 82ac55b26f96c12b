// Sweep execution and ComparisonRow CSV.

#include <cmath>
#include <fstream>
#include <sstream>

#include "zmom/asymptotics.hpp"
#include "zmom/errors.hpp"
#include "zmom/format.hpp"
#include "zmom/sweep.hpp"

namespace zmom {

namespace {

constexpr char kRowHeader[] = "delta1,delta2,T,empirical,predicted,ratio,regime,n_zeros,reason";

std::string encode_regime(const RegimeReport& r) {
    std::string zone = r.small_condition ? "small" : (r.large_condition ? "large" : "gap");
    return zone + ";chi=" + std::to_string(r.chi) + ";q=" + (r.indicator_quarter ? "1" : "0");
}

} // namespace

std::vector<ComparisonRow> run_sweep(const SweepConfig& config, const ZeroCache& cache) {
    if (config.formulas.size() != 1)
        throw Error("sweep requires exactly one formula per run");
    const std::string& formula = config.formulas.front();
    if (formula != "eq3" && formula != "thm2" && formula != "quadratic" && formula != "gonek")
        throw Error("unknown formula: " + formula);

    std::vector<ComparisonRow> rows;
    for (const Shift& d : config.delta_list) {
        for (double T : config.t_checkpoints) {
            ComparisonRow row;
            row.delta1 = d.delta1;
            row.delta2 = d.delta2;
            row.T = T;
            try {
                MomentResult m;
                if (formula == "gonek") {
                    double alpha = d.delta1;
                    m = moment_gonek(alpha, T, cache, 0, config.threads);
                    row.predicted = main_term_gonek(alpha, T);
                    row.regime = encode_regime(classify_regime(
                        Shift(0.0, 2.0 * M_PI * alpha / std::log(T / (2.0 * M_PI))), T));
                } else {
                    m = moment_s(d, T, cache, 0, config.threads);
                    bool limit = (d.delta1 == 0.0);
                    if (formula == "eq3")
                        row.predicted = main_term(d, T, CutoffRule::log_threshold, limit).total;
                    else if (formula == "thm2")
                        row.predicted = main_term(d, T, CutoffRule::quarter_interval, limit).total;
                    else
                        row.predicted = main_term_quadratic(d, T);
                    row.regime = encode_regime(classify_regime(d, T));
                }
                row.empirical = m.value.real();
                row.n_zeros = m.n_zeros;
                if (std::fabs(row.predicted) > 0.0) {
                    row.ratio = row.empirical / row.predicted;
                    row.ratio_null = false;
                }
            } catch (const Error& e) {
                row.reason = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_rows_csv(const std::vector<ComparisonRow>& rows, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << kRowHeader << "\n";
    for (const auto& r : rows) {
        f << fmt15(r.delta1) << "," << fmt15(r.delta2) << "," << fmt15(r.T) << ",";
        if (r.reason.empty()) {
            f << fmt15(r.empirical) << "," << fmt15(r.predicted) << ","
              << (r.ratio_null ? "null" : fmt15(r.ratio)) << "," << r.regime << "," << r.n_zeros << ",";
        } else {
            f << "null,null,null,," << r.n_zeros << "," << r.reason;
        }
        f << "\n";
    }
    if (!f) throw Error("write failure on " + path);
}

std::vector<ComparisonRow> read_rows_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line != kRowHeader)
        throw Error("malformed comparison CSV: bad header");
    std::vector<ComparisonRow> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field[9];
        for (int i = 0; i < 9; ++i)
            if (!std::getline(ss, field[i], ',') && i < 8)
                throw Error("malformed comparison CSV row: " + line);
        ComparisonRow r;
        std::size_t pos = 0;
        auto num = [&](const std::string& s) {
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw Error("malformed numeric field: " + s);
            return v;
        };
        r.delta1 = num(field[0]);
        r.delta2 = num(field[1]);
        r.T = num(field[2]);
        if (field[3] != "null") r.empirical = num(field[3]);
        if (field[4] != "null") r.predicted = num(field[4]);
        if (field[5] != "null") {
            r.ratio = num(field[5]);
            r.ratio_null = false;
        }
        r.regime = field[6];
        if (!field[7].empty()) r.n_zeros = std::stoll(field[7]);
        r.reason = field[8];
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace zmom

#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minviable/business_case.hpp"
#include "minviable/grid.hpp"
#include "minviable/landscape.hpp"
#include "minviable/roc_sim.hpp"

namespace minviable {

/// Fixed-precision decimal used by every CSV column so emitted files are
/// reproducible byte for byte.
inline std::string format_fixed(double v, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const BusinessCase& c) {
    return nlohmann::json{{"num_cases", c.num_cases},
                          {"base_rate", c.base_rate},
                          {"tp_benefit", c.tp_benefit},
                          {"fp_cost", c.fp_cost},
                          {"min_roi", c.min_roi}};
}

inline nlohmann::json to_json(const SearchConfig& cfg) {
    return nlohmann::json{{"beta_min", cfg.beta_grid.front()},
                          {"beta_max", cfg.beta_grid.back()},
                          {"beta_steps", cfg.beta_grid.size()},
                          {"thresholds", cfg.thresholds},
                          {"alpha_tol", cfg.alpha_tol}};
}

/// Everything one estimate run needs to be audited later: the resolved case
/// and search settings alongside the result.
struct EstimateRecord {
    BusinessCase business_case;
    SearchConfig search;
    MinViableResult result;
};

inline nlohmann::json to_json(const EstimateRecord& rec) {
    nlohmann::json j{{"kind", "estimate"},
                     {"case", to_json(rec.business_case)},
                     {"search", to_json(rec.search)},
                     {"feasible", rec.result.feasible},
                     {"simplicity", rec.result.simplicity},
                     {"precision_lower_bound", rec.result.precision_lower_bound}};
    if (rec.result.feasible) {
        j["auc"] = *rec.result.auc;
        j["alpha"] = rec.result.curve->alpha;
        j["beta"] = rec.result.curve->beta;
        j["fpr"] = rec.result.operating_point->fpr;
        j["tpr"] = rec.result.operating_point->tpr;
        j["tp"] = rec.result.operating_point->tp;
        j["fp"] = rec.result.operating_point->fp;
        j["payoff"] = rec.result.operating_point->payoff;
        j["precision"] = *rec.result.precision;
        j["recall"] = *rec.result.recall;
        j["fallout"] = *rec.result.fallout;
    }
    return j;
}

inline EstimateRecord estimate_record_from_json(const nlohmann::json& j) {
    EstimateRecord rec;
    const auto& c = j.at("case");
    rec.business_case =
        BusinessCase{c.at("num_cases").get<double>(),
                     c.at("base_rate").get<double>(),
                     c.at("tp_benefit").get<double>(),
                     c.at("fp_cost").get<double>(),
                     c.at("min_roi").get<double>()};
    const auto& s = j.at("search");
    rec.search.beta_grid =
        log_spaced(s.at("beta_min").get<double>(), s.at("beta_max").get<double>(),
                   s.at("beta_steps").get<std::size_t>());
    rec.search.thresholds = s.at("thresholds").get<std::size_t>();
    rec.search.alpha_tol = s.at("alpha_tol").get<double>();
    rec.result.feasible = j.at("feasible").get<bool>();
    rec.result.simplicity = j.at("simplicity").get<double>();
    rec.result.precision_lower_bound =
        j.at("precision_lower_bound").get<double>();
    if (rec.result.feasible) {
        rec.result.auc = j.at("auc").get<double>();
        rec.result.curve =
            RocCurve{j.at("alpha").get<double>(), j.at("beta").get<double>()};
        rec.result.operating_point = OperatingPoint{
            j.at("fpr").get<double>(), j.at("tpr").get<double>(),
            j.at("tp").get<double>(), j.at("fp").get<double>(),
            j.at("payoff").get<double>()};
        rec.result.precision = j.at("precision").get<double>();
        rec.result.recall = j.at("recall").get<double>();
        rec.result.fallout = j.at("fallout").get<double>();
    }
    return rec;
}

/// Reads one business case from the JSON file schema: num_cases, base_rate
/// and min_roi are always required; either tp_benefit and fp_cost are given
/// directly, or a cost_matrix object {tp, fp, fn, tn} is supplied and takes
/// precedence, in which case the canonical form is derived from it.
inline BusinessCase case_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("case file must hold a JSON object");
    const auto number = [&j](const char* key) {
        if (!j.contains(key) || !j.at(key).is_number())
            throw std::invalid_argument(std::string("case file: missing or "
                                                    "non-numeric field '") +
                                        key + "'");
        return j.at(key).get<double>();
    };
    const double num_cases = number("num_cases");
    const double base_rate = number("base_rate");
    const double min_roi = number("min_roi");
    if (j.contains("cost_matrix")) {
        const auto& m = j.at("cost_matrix");
        const auto cell = [&m](const char* key) {
            if (!m.contains(key) || !m.at(key).is_number())
                throw std::invalid_argument(
                    std::string("case file: cost_matrix needs numeric '") +
                    key + "'");
            return m.at(key).get<double>();
        };
        const CostMatrix matrix{cell("tp"), cell("fp"), cell("fn"), cell("tn")};
        return reduce_cost_matrix(matrix, num_cases, base_rate, min_roi);
    }
    return validate(BusinessCase{num_cases, base_rate, number("tp_benefit"),
                                 number("fp_cost"), min_roi});
}

inline BusinessCase load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open case file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("case file is not valid JSON: " +
                                    std::string(e.what()));
    }
    return case_from_json(j);
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr const char* kEstimateCsvHeader =
    "feasible,auc,alpha,beta,fpr,tpr,tp,fp,payoff,precision,recall,fallout,"
    "simplicity,precision_lower_bound";

inline void write_estimate_csv(std::ostream& out, const EstimateRecord& rec) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_fixed(*v) : std::string();
    };
    const MinViableResult& r = rec.result;
    std::optional<double> alpha, beta, fpr, tpr, tp, fp, pay;
    if (r.feasible) {
        alpha = r.curve->alpha;
        beta = r.curve->beta;
        fpr = r.operating_point->fpr;
        tpr = r.operating_point->tpr;
        tp = r.operating_point->tp;
        fp = r.operating_point->fp;
        pay = r.operating_point->payoff;
    }
    out << kEstimateCsvHeader << '\n'
        << (r.feasible ? "true" : "false") << ',' << opt(r.auc) << ','
        << opt(alpha) << ',' << opt(beta) << ',' << opt(fpr) << ','
        << opt(tpr) << ',' << opt(tp) << ',' << opt(fp) << ',' << opt(pay)
        << ',' << opt(r.precision) << ',' << opt(r.recall) << ','
        << opt(r.fallout) << ',' << format_fixed(r.simplicity) << ','
        << format_fixed(r.precision_lower_bound) << '\n';
}

inline constexpr const char* kSweepCsvHeader =
    "dim_value,mean_auc,q1_auc,q3_auc,infeasible_fraction";

inline void write_sweep_csv(std::ostream& out,
                            const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << format_fixed(r.dim_value) << ',' << format_fixed(r.mean_auc)
            << ',' << format_fixed(r.q1_auc) << ',' << format_fixed(r.q3_auc)
            << ',' << format_fixed(r.infeasible_fraction) << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

inline double parse_number(const std::string& s, const char* context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed number in ") +
                                    context + ": '" + s + "'");
    }
}

}  // namespace detail

inline std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader)
        throw std::invalid_argument("unexpected sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 5)
            throw std::invalid_argument("sweep CSV row needs 5 fields");
        SweepRow r;
        r.dim_value = detail::parse_number(f[0], "sweep CSV");
        r.mean_auc = detail::parse_number(f[1], "sweep CSV");
        r.q1_auc = detail::parse_number(f[2], "sweep CSV");
        r.q3_auc = detail::parse_number(f[3], "sweep CSV");
        r.infeasible_fraction = detail::parse_number(f[4], "sweep CSV");
        rows.push_back(r);
    }
    return rows;
}

inline constexpr const char* kSurfaceCsvHeader =
    "base_rate,cost_to_benefit,min_auc,feasible";

/// One long-format surface row; min_auc is empty for infeasible cells.
struct SurfaceCsvRow {
    double base_rate = 0.0;
    double cost_to_benefit = 0.0;
    std::optional<double> min_auc;
    bool feasible = false;
};

inline std::vector<SurfaceCsvRow> surface_rows(const SurfaceResult& s) {
    std::vector<SurfaceCsvRow> rows;
    rows.reserve(s.base_rates.size() * s.cost_to_benefit.size());
    for (std::size_t i = 0; i < s.base_rates.size(); ++i)
        for (std::size_t j = 0; j < s.cost_to_benefit.size(); ++j) {
            SurfaceCsvRow r;
            r.base_rate = s.base_rates[i];
            r.cost_to_benefit = s.cost_to_benefit[j];
            r.feasible = s.feasible[i][j];
            if (r.feasible) r.min_auc = s.min_auc[i][j];
            rows.push_back(r);
        }
    return rows;
}

inline void write_surface_csv(std::ostream& out,
                              const std::vector<SurfaceCsvRow>& rows) {
    out << kSurfaceCsvHeader << '\n';
    for (const SurfaceCsvRow& r : rows) {
        out << format_fixed(r.base_rate) << ','
            << format_fixed(r.cost_to_benefit) << ','
            << (r.min_auc ? format_fixed(*r.min_auc) : std::string()) << ','
            << (r.feasible ? "true" : "false") << '\n';
    }
}

inline void write_surface_csv(std::ostream& out, const SurfaceResult& s) {
    write_surface_csv(out, surface_rows(s));
}

inline std::vector<SurfaceCsvRow> parse_surface_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSurfaceCsvHeader)
        throw std::invalid_argument("unexpected surface CSV header");
    std::vector<SurfaceCsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 4)
            throw std::invalid_argument("surface CSV row needs 4 fields");
        SurfaceCsvRow r;
        r.base_rate = detail::parse_number(f[0], "surface CSV");
        r.cost_to_benefit = detail::parse_number(f[1], "surface CSV");
        if (!f[2].empty()) r.min_auc = detail::parse_number(f[2], "surface CSV");
        if (f[3] == "true")
            r.feasible = true;
        else if (f[3] == "false")
            r.feasible = false;
        else
            throw std::invalid_argument("surface CSV feasible must be "
                                        "true/false");
        rows.push_back(r);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace detail {

struct SvgScale {
    double lo, hi, px_lo, px_hi;
    double operator()(double v) const {
        if (hi == lo) return 0.5 * (px_lo + px_hi);
        return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
    }
};

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace detail

/// Self-contained line chart of a sweep: mean AUC over a log-scaled
/// dimension axis with the interquartile band shaded behind it.
inline void write_sweep_svg(std::ostream& out,
                            const std::vector<SweepRow>& rows,
                            const std::string& x_label) {
    if (rows.empty()) throw std::invalid_argument("cannot chart an empty sweep");
    const double width = 720, height = 480;
    const double ml = 70, mr = 20, mt = 20, mb = 55;

    double x_min = std::log10(rows.front().dim_value);
    double x_max = x_min;
    for (const SweepRow& r : rows) {
        x_min = std::min(x_min, std::log10(r.dim_value));
        x_max = std::max(x_max, std::log10(r.dim_value));
    }
    const detail::SvgScale sx{x_min, x_max, ml, width - mr};
    const detail::SvgScale sy{0.5, 1.0, height - mb, mt};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << width << "\" height=\"" << height << "\" "
        << "viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // interquartile band
    out << "<polygon fill=\"#cfd8dc\" stroke=\"none\" points=\"";
    for (const SweepRow& r : rows)
        out << detail::svg_num(sx(std::log10(r.dim_value))) << ','
            << detail::svg_num(sy(r.q3_auc)) << ' ';
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        out << detail::svg_num(sx(std::log10(it->dim_value))) << ','
            << detail::svg_num(sy(it->q1_auc)) << ' ';
    out << "\"/>\n";

    // mean line
    out << "<polyline fill=\"none\" stroke=\"#1565c0\" stroke-width=\"2\" "
        << "points=\"";
    for (const SweepRow& r : rows)
        out << detail::svg_num(sx(std::log10(r.dim_value))) << ','
            << detail::svg_num(sy(r.mean_auc)) << ' ';
    out << "\"/>\n";

    // axes
    out << "<line x1=\"" << detail::svg_num(ml) << "\" y1=\""
        << detail::svg_num(mt) << "\" x2=\"" << detail::svg_num(ml)
        << "\" y2=\"" << detail::svg_num(height - mb)
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << detail::svg_num(ml) << "\" y1=\""
        << detail::svg_num(height - mb) << "\" x2=\""
        << detail::svg_num(width - mr) << "\" y2=\""
        << detail::svg_num(height - mb) << "\" stroke=\"black\"/>\n";

    for (double tick = 0.5; tick <= 1.0 + 1e-9; tick += 0.1) {
        const double y = sy(tick);
        out << "<line x1=\"" << detail::svg_num(ml - 5) << "\" y1=\""
            << detail::svg_num(y) << "\" x2=\"" << detail::svg_num(ml)
            << "\" y2=\"" << detail::svg_num(y) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << detail::svg_num(ml - 10) << "\" y=\""
            << detail::svg_num(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
            << "font-size=\"12\">" << detail::svg_num(tick) << "</text>\n";
    }
    for (double d = std::ceil(x_min); d <= std::floor(x_max) + 1e-9; d += 1.0) {
        const double x = sx(d);
        out << "<line x1=\"" << detail::svg_num(x) << "\" y1=\""
            << detail::svg_num(height - mb) << "\" x2=\""
            << detail::svg_num(x) << "\" y2=\""
            << detail::svg_num(height - mb + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << detail::svg_num(x) << "\" y=\""
            << detail::svg_num(height - mb + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"12\">1e" << static_cast<long long>(d)
            << "</text>\n";
    }

    out << "<text x=\"" << detail::svg_num(ml + 0.5 * (width - ml - mr))
        << "\" y=\"" << detail::svg_num(height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\">" << x_label << "</text>\n"
        << "<text x=\"18\" y=\""
        << detail::svg_num(mt + 0.5 * (height - mt - mb))
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\" transform=\"rotate(-90 18 "
        << detail::svg_num(mt + 0.5 * (height - mt - mb))
        << ")\">minimum viable AUC</text>\n</svg>\n";
}

}  // namespace minviable

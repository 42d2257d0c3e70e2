#include "fleetcap/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fleetcap {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_ratio(double value) {
    if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 9.007199254740992e15) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(0) << value;
        return os.str();
    }
    std::ostringstream os;
    os << std::setprecision(6) << value;
    return os.str();
}

std::string format_tons(double value) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << value;
    std::string s = os.str();
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
        const bool dot = s.back() == '.';
        s.pop_back();
        if (dot) break;
    }
    return s;
}

namespace {

json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_ratio(*v) : std::string{};
}

std::string opt_tons(const std::optional<double>& v) {
    return v ? format_tons(*v) : std::string{};
}

ordered_json fit_json(const RegressionFit& fit) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i < fit.k; ++i) {
        ordered_json c;
        c["name"] = fit.names[i];
        c["coefficient"] = fit.coefficients[i];
        c["std_error"] = fit.std_errors[i];
        c["t_stat"] = fit.t_stats[i];
        c["p_value"] = fit.p_values[i];
        coeffs.push_back(std::move(c));
    }
    j["coefficients"] = std::move(coeffs);
    j["n"] = fit.n;
    j["r_squared"] = fit.r_squared;
    j["adj_r_squared"] = fit.adj_r_squared;
    j["se_of_regression"] = fit.se_of_regression;
    j["ssr"] = fit.ssr;
    j["log_likelihood"] = fit.log_likelihood;
    j["aic"] = fit.aic;
    j["schwarz"] = fit.schwarz;
    j["durbin_watson"] = fit.durbin_watson;
    j["f_stat"] = fit.f_stat;
    j["f_p_value"] = fit.f_p_value;
    j["mean_dependent"] = fit.mean_dependent;
    j["sd_dependent"] = fit.sd_dependent;
    j["perfect_fit"] = fit.perfect_fit;
    return j;
}

void fit_text(std::ostream& out, const RegressionFit& fit, const std::string& title) {
    out << title << "\n";
    out << std::string(title.size(), '-') << "\n";
    out << std::left << std::setw(12) << "variable" << std::right << std::setw(16)
        << "coefficient" << std::setw(14) << "std error" << std::setw(12) << "t-stat"
        << std::setw(12) << "p" << "\n";
    for (int i = 0; i < fit.k; ++i) {
        out << std::left << std::setw(12) << fit.names[i] << std::right << std::setw(16)
            << format_ratio(fit.coefficients[i]) << std::setw(14)
            << format_ratio(fit.std_errors[i]) << std::setw(12)
            << format_ratio(fit.t_stats[i]) << std::setw(12)
            << format_ratio(fit.p_values[i]) << "\n";
    }
    out << "n " << fit.n
        << "  R-squared " << format_ratio(fit.r_squared)
        << "  adj " << format_ratio(fit.adj_r_squared)
        << "  s.e. " << format_ratio(fit.se_of_regression) << "\n";
    out << "SSR " << format_ratio(fit.ssr)
        << "  log-likelihood " << format_ratio(fit.log_likelihood)
        << "  AIC " << format_ratio(fit.aic)
        << "  Schwarz " << format_ratio(fit.schwarz) << "\n";
    out << "DW " << format_ratio(fit.durbin_watson)
        << "  F " << format_ratio(fit.f_stat)
        << " (p " << format_ratio(fit.f_p_value) << ")"
        << "  mean dep " << format_ratio(fit.mean_dependent)
        << "  s.d. dep " << format_ratio(fit.sd_dependent) << "\n";
    if (fit.perfect_fit)
        out << "note: residuals are numerically zero; inferential statistics omitted\n";
}

} // namespace

void write_capacity_tables(std::ostream& out,
                           std::span<const YearCapacityTable> tables,
                           OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "year,province,phi,capacity_utilization,capacity_output_t\n";
        for (const auto& table : tables) {
            for (const auto& r : table.results) {
                out << r.year << ',' << r.province << ',' << format_ratio(r.phi) << ','
                    << format_ratio(r.capacity_utilization) << ','
                    << format_tons(r.capacity_output_t) << '\n';
            }
            out << table.year << ",National,"
                << format_ratio(table.total_capacity_t > 0
                                    ? table.total_capacity_t / table.total_catch_t
                                    : 0.0)
                << ',' << format_ratio(table.national_utilization()) << ','
                << format_tons(table.total_capacity_t) << '\n';
        }
        return;
    }
    ordered_json years = ordered_json::array();
    for (const auto& table : tables) {
        ordered_json jt;
        jt["year"] = table.year;
        ordered_json provinces = ordered_json::array();
        for (const auto& r : table.results) {
            ordered_json jr;
            jr["province"] = r.province;
            jr["phi"] = r.phi;
            jr["capacity_utilization"] = r.capacity_utilization;
            jr["capacity_output_t"] = r.capacity_output_t;
            provinces.push_back(std::move(jr));
        }
        jt["provinces"] = std::move(provinces);
        jt["total_catch_t"] = table.total_catch_t;
        jt["total_capacity_t"] = table.total_capacity_t;
        jt["national_utilization"] = table.national_utilization();
        years.push_back(std::move(jt));
    }
    out << years.dump(2) << '\n';
}

void write_peer_weights(std::ostream& out,
                        std::span<const YearCapacityTable> tables,
                        std::span<const YearPanel> panels) {
    out << "year,province,peer,lambda\n";
    for (const auto& table : tables) {
        const YearPanel* panel = nullptr;
        for (const auto& p : panels)
            if (p.year == table.year) { panel = &p; break; }
        if (!panel) continue;
        for (const auto& r : table.results)
            for (std::size_t j = 0; j < r.lambda.size(); ++j)
                if (r.lambda[j] > 0)
                    out << r.year << ',' << r.province << ','
                        << panel->records[j].province << ',' << format_ratio(r.lambda[j])
                        << '\n';
    }
}

void write_national_series(std::ostream& out, const NationalSeries& series,
                           OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "year,catch_t,capacity_t,capacity_increment_t,income_yuan,"
               "income_per_capacity_ton,income_per_catch_ton,utilization,"
               "utilization_increment\n";
        for (const auto& r : series.rows) {
            out << r.year << ',' << format_tons(r.catch_t) << ','
                << format_tons(r.capacity_t) << ',' << opt_tons(r.capacity_increment)
                << ',' << opt_tons(r.income_yuan) << ','
                << opt_field(r.income_per_capacity_ton) << ','
                << opt_field(r.income_per_catch_ton) << ',' << format_ratio(r.utilization)
                << ',' << opt_field(r.utilization_increment) << '\n';
        }
        return;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& r : series.rows) {
        ordered_json jr;
        jr["year"] = r.year;
        jr["catch_t"] = r.catch_t;
        jr["capacity_t"] = r.capacity_t;
        jr["capacity_increment_t"] = opt_json(r.capacity_increment);
        jr["income_yuan"] = opt_json(r.income_yuan);
        jr["income_per_capacity_ton"] = opt_json(r.income_per_capacity_ton);
        jr["income_per_catch_ton"] = opt_json(r.income_per_catch_ton);
        jr["utilization"] = r.utilization;
        jr["utilization_increment"] = opt_json(r.utilization_increment);
        rows.push_back(std::move(jr));
    }
    out << rows.dump(2) << '\n';
}

void write_fit_report(std::ostream& out, const RegressionFit& fit,
                      const std::string& title, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        fit_text(out, fit, title);
        return;
    }
    ordered_json j;
    j["title"] = title;
    j["fit"] = fit_json(fit);
    out << j.dump(2) << '\n';
}

void write_equations_report(std::ostream& out, const PdlModel& capacity,
                            const CompoundDiffModel& utilization,
                            OutputFormat format) {
    if (format == OutputFormat::Csv) {
        fit_text(out, capacity.fit, "capacity increment equation (distributed lag)");
        out << "lag weights:";
        for (std::size_t i = 0; i < capacity.equation.betas.size(); ++i)
            out << " beta" << i << '=' << format_ratio(capacity.equation.betas[i]);
        out << "  intercept " << format_ratio(capacity.equation.intercept) << "\n\n";
        fit_text(out, utilization.fit, "utilization increment equation");
        return;
    }
    ordered_json j;
    j["capacity_equation"]["intercept"] = capacity.equation.intercept;
    j["capacity_equation"]["betas"] = capacity.equation.betas;
    j["capacity_equation"]["fit"] = fit_json(capacity.fit);
    j["utilization_equation"]["intercept"] = utilization.equation.intercept;
    j["utilization_equation"]["b1"] = utilization.equation.b1;
    j["utilization_equation"]["b2"] = utilization.equation.b2;
    j["utilization_equation"]["fit"] = fit_json(utilization.fit);
    out << j.dump(2) << '\n';
}

void write_trajectory(std::ostream& out, const ScenarioTrajectory& traj,
                      OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "year,tax_rate,sim_capacity_t,sim_utilization,sim_catch_t,"
               "after_tax_income_yuan,income_per_capacity_ton\n";
        for (const auto& r : traj.rows) {
            out << r.year << ',' << format_ratio(traj.tax_rate) << ','
                << format_tons(r.capacity_t) << ',' << format_ratio(r.utilization)
                << ',' << format_tons(r.catch_t) << ','
                << format_tons(r.after_tax_income) << ','
                << format_ratio(r.capacity_t > 0 ? r.after_tax_income / r.capacity_t : 0.0)
                << '\n';
        }
        return;
    }
    ordered_json j;
    j["tax_rate"] = traj.tax_rate;
    j["base"] = traj.base == TaxBase::ActualCapacity ? "actual" : "simulated";
    j["curtailment"] = traj.curtailment();
    ordered_json rows = ordered_json::array();
    for (const auto& r : traj.rows) {
        ordered_json jr;
        jr["year"] = r.year;
        jr["seeded"] = r.seeded;
        jr["sim_capacity_t"] = r.capacity_t;
        jr["sim_utilization"] = r.utilization;
        jr["sim_catch_t"] = r.catch_t;
        jr["after_tax_income_yuan"] = r.after_tax_income;
        jr["utilization_clamped"] = r.utilization_clamped;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["warnings"] = traj.warnings;
    out << j.dump(2) << '\n';
}

void write_sweep(std::ostream& out, std::span<const SweepPoint> points,
                 OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "tax_rate,curtailment_fraction,final_capacity_t\n";
        for (const auto& p : points)
            out << format_ratio(p.tax_rate) << ',' << format_ratio(p.curtailment) << ','
                << format_tons(p.final_capacity_t) << '\n';
        return;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& p : points) {
        ordered_json jr;
        jr["tax_rate"] = p.tax_rate;
        jr["curtailment_fraction"] = p.curtailment;
        jr["final_capacity_t"] = p.final_capacity_t;
        rows.push_back(std::move(jr));
    }
    out << rows.dump(2) << '\n';
}

void write_findings(std::ostream& out, std::span<const Finding> findings,
                    OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "year,province,rule,detail\n";
        for (const auto& f : findings) {
            std::string detail = f.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            out << f.year << ',' << f.province << ',' << f.rule << ',' << detail << '\n';
        }
        return;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json jr;
        jr["year"] = f.year;
        jr["province"] = f.province;
        jr["rule"] = f.rule;
        jr["detail"] = f.detail;
        rows.push_back(std::move(jr));
    }
    out << rows.dump(2) << '\n';
}

void write_svg_chart(std::ostream& out, const std::string& title,
                     std::span<const ChartSeries> series) {
    constexpr int W = 720, H = 420, ML = 80, MR = 20, MT = 40, MB = 40;
    double ymin = 0, ymax = 1;
    int xmin = 0, xmax = 1;
    bool first = true;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (first) {
                ymin = ymax = s.values[i];
                xmin = xmax = s.years[i];
                first = false;
            } else {
                ymin = std::min(ymin, s.values[i]);
                ymax = std::max(ymax, s.values[i]);
                xmin = std::min(xmin, s.years[i]);
                xmax = std::max(xmax, s.years[i]);
            }
        }
    }
    if (ymax == ymin) ymax = ymin + 1;
    if (xmax == xmin) xmax = xmin + 1;
    auto sx = [&](double year) {
        return ML + (year - xmin) / double(xmax - xmin) * (W - ML - MR);
    };
    auto sy = [&](double v) {
        return H - MB - (v - ymin) / (ymax - ymin) * (H - MT - MB);
    };
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\""
        << H - MB << "\" stroke=\"black\"/>\n";
    for (int year = xmin; year <= xmax; ++year) {
        out << "<text x=\"" << format_ratio(sx(year)) << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << year << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        double v = ymin + (ymax - ymin) * i / 4.0;
        out << "<text x=\"" << ML - 6 << "\" y=\"" << format_ratio(sy(v) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << format_ratio(v) << "</text>\n";
    }
    int color = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[color % 5]
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i) out << ' ';
            out << format_ratio(sx(s.years[i])) << ',' << format_ratio(sy(s.values[i]));
        }
        out << "\"/>\n";
        out << "<text x=\"" << W - MR - 4 << "\" y=\"" << MT + 14 * (color + 1)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
            << kColors[color % 5] << "\">" << s.label << "</text>\n";
        ++color;
    }
    out << "</svg>\n";
}

} // namespace fleetcap

#pragma once

#include "fleetcap/compound.hpp"
#include "fleetcap/dea.hpp"
#include "fleetcap/panel.hpp"
#include "fleetcap/pdl.hpp"
#include "fleetcap/tax_sim.hpp"
#include "fleetcap/validation.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace fleetcap {

enum class OutputFormat { Csv, Json };

/// Six-significant-digit decimal, the convention for ratios and
/// coefficients in all reports. Exact integers up to 2^53 print in full.
std::string format_ratio(double value);

/// Fixed-point with at most two decimals, trailing zeros trimmed — the
/// convention for ton and yuan quantities (never scientific notation).
std::string format_tons(double value);

/// Per-province capacity table, one row per DMU plus a `National` aggregate
/// row per year: year,province,phi,capacity_utilization,capacity_output_t.
void write_capacity_tables(std::ostream& out,
                           std::span<const YearCapacityTable> tables,
                           OutputFormat format);

/// Peer weights of every DMU: year,province,peer,lambda (zero weights
/// omitted). `panels` supplies the peer names, aligned with the tables.
void write_peer_weights(std::ostream& out,
                        std::span<const YearCapacityTable> tables,
                        std::span<const YearPanel> panels);

/// Derived national series:
/// year,catch_t,capacity_t,capacity_increment_t,income_yuan,
/// income_per_capacity_ton,income_per_catch_ton,utilization,
/// utilization_increment. Absent values are empty fields (CSV) / null (JSON).
void write_national_series(std::ostream& out, const NationalSeries& series,
                           OutputFormat format);

/// Full diagnostic block of a fit, plain text or JSON.
void write_fit_report(std::ostream& out, const RegressionFit& fit,
                      const std::string& title, OutputFormat format);

/// Both estimated equations with their recovered lag weights.
void write_equations_report(std::ostream& out, const PdlModel& capacity,
                            const CompoundDiffModel& utilization,
                            OutputFormat format);

/// Scenario trajectory:
/// year,tax_rate,sim_capacity_t,sim_utilization,sim_catch_t,
/// after_tax_income_yuan,income_per_capacity_ton.
void write_trajectory(std::ostream& out, const ScenarioTrajectory& traj,
                      OutputFormat format);

/// Sweep results: tax_rate,curtailment_fraction,final_capacity_t.
void write_sweep(std::ostream& out, std::span<const SweepPoint> points,
                 OutputFormat format);

/// Validation findings: year,province,rule,detail.
void write_findings(std::ostream& out, std::span<const Finding> findings,
                    OutputFormat format);

/// Minimal standalone SVG line chart of one or more yearly series.
struct ChartSeries {
    std::string label;
    std::vector<int> years;
    std::vector<double> values;
};
void write_svg_chart(std::ostream& out, const std::string& title,
                     std::span<const ChartSeries> series);

} // namespace fleetcap

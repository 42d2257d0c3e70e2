#pragma once

#include "fleetcap/compound.hpp"
#include "fleetcap/panel.hpp"
#include "fleetcap/pdl.hpp"
#include "fleetcap/tax_sim.hpp"

#include <string>
#include <vector>

namespace fleetcap {

/// Directory holding the bundled 1993-2005 statistical fixtures. Honors the
/// FLEETCAP_DATA_DIR environment variable, then the compiled-in source-tree
/// location.
std::string default_data_dir();

inline constexpr const char* kPanelFile = "panel_1993_2005.csv";
inline constexpr const char* kNationalFile = "national_1993_2005.csv";
inline constexpr const char* kRecordedDeaFile = "dea_recorded_1993_2005.csv";

std::vector<YearPanel> load_bundled_panel(const std::string& dir = default_data_dir());
NationalSeries load_bundled_national(const std::string& dir = default_data_dir());
std::vector<RecordedDea> load_bundled_recorded(const std::string& dir = default_data_dir());

/// The published 2004 gross income is inconsistent with the published
/// per-capacity-ton income of the same year (12517503013 yuan vs 849.7
/// yuan/ton x 14633268 t). Estimation uses the per-ton figure, which is the
/// one consistent with the rest of that year's row; simulation keeps the
/// published gross figure.
inline constexpr double kPerTonIncome2004 = 849.7;

/// Gross income by year for estimation: the published series with the 2004
/// value replaced by kPerTonIncome2004 x capacity(2004). Returned rows are
/// the consecutive years that carry income (1994-2005 in the bundled data).
struct IncomeRow {
    int year = 0;
    double income_yuan = 0;
};
std::vector<IncomeRow> estimation_income(const NationalSeries& series);

/// Fit the capacity-increment equation (distributed lag of income, L = 3,
/// quadratic weights, far endpoint pinned) on every year with a full lag
/// window; with the bundled data that is 1997-2005.
PdlModel fit_capacity_equation(const NationalSeries& series);

/// Fit the utilization-increment equation on every year of the income block
/// with two prior capacity levels inside the block; bundled: 1996-2005.
CompoundDiffModel fit_utilization_equation(const NationalSeries& series);

/// Yearly simulator inputs (published gross income, capacity, utilization)
/// over the income block; bundled: 1994-2005.
std::vector<SimYearInput> simulation_inputs(const NationalSeries& series);

/// Coefficients as published in the source study, for --coeffs printed.
CapacityEquation printed_capacity_equation();
UtilizationEquation printed_utilization_equation();

} // namespace fleetcap

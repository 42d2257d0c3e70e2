#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fleetcap {

/// One province-year observation of the inshore fleet: four inputs
/// (vessel count, gross tonnage, engine power, labour force) and the
/// inshore catch as output. All quantities are real-valued; the source
/// data contains fractional vessel counts.
struct FleetRecord {
    std::string province;
    int year = 0;
    double vessels = 0;  // count
    double tonnage = 0;  // gross tons
    double power = 0;    // kW
    double labor = 0;    // persons
    double catch_t = 0;  // tons

    std::array<double, 4> inputs() const { return {vessels, tonnage, power, labor}; }
};

/// The cross-section of DMUs for one year, records sorted by province.
struct YearPanel {
    int year = 0;
    std::vector<FleetRecord> records;

    const FleetRecord* find(std::string_view province) const;
};

/// Parse the panel CSV (`province,year,vessels,tonnage,power,labor,catch`)
/// into one YearPanel per distinct year. Throws DataError with the line
/// number on malformed rows, negative values, or duplicate (province, year)
/// keys. An empty stream yields an empty sequence.
std::vector<YearPanel> load_panel(std::istream& in);

/// Re-emit the panel in the same CSV schema. Numbers are written in
/// shortest round-trip decimal form, so a loaded file re-serializes with
/// every numeric field unchanged as text.
void write_panel(std::ostream& out, std::span<const YearPanel> panels);

/// Shortest decimal text that parses back to exactly the same double.
std::string format_number(double value);

/// Raw national inputs for one year: practical catch A, capacity output B,
/// and gross income D (absent for seed rows without published income).
struct NationalInput {
    int year = 0;
    double catch_t = 0;
    double capacity_t = 0;
    std::optional<double> income_yuan;
};

/// One derived row of the national series. Increment columns are absent in
/// the first year; income-derived columns are absent when income is.
struct NationalRow {
    int year = 0;
    double catch_t = 0;                               // A
    double capacity_t = 0;                            // B
    std::optional<double> capacity_increment;         // C = B - B(prev)
    std::optional<double> income_yuan;                // D
    std::optional<double> income_per_capacity_ton;    // E = D/B
    std::optional<double> income_per_catch_ton;       // F = D/A
    double utilization = 0;                           // G = A/B
    std::optional<double> utilization_increment;      // H = G - G(prev)
};

struct NationalSeries {
    std::vector<NationalRow> rows;

    const NationalRow* find(int year) const;
};

/// Compute the derived national columns from aligned yearly inputs.
/// Years must be consecutive; A and B must be positive.
NationalSeries derive_national_series(std::span<const NationalInput> inputs);

/// Parse `year,catch_t,capacity_t,income_yuan` (income may be empty).
std::vector<NationalInput> load_national(std::istream& in);

/// A capacity-utilization / capacity-output pair as recorded in the source
/// statistical tables, used for cross-checking computed results.
struct RecordedDea {
    int year = 0;
    std::string province;
    double cu = 0;
    double capacity_output_t = 0;
};

/// Parse `year,province,cu,capacity_output_t`.
std::vector<RecordedDea> load_recorded_dea(std::istream& in);

} // namespace fleetcap

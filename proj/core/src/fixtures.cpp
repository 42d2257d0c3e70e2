#include "fleetcap/fixtures.hpp"
#include "fleetcap/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fleetcap {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

// Consecutive run of rows carrying gross income. The bundled series has a
// single block (1994-2005); a gap inside the block is a data error.
std::vector<const NationalRow*> income_block(const NationalSeries& series) {
    std::vector<const NationalRow*> block;
    for (const auto& row : series.rows) {
        if (!row.income_yuan) {
            if (!block.empty())
                throw DataError("income series has a gap after year " +
                                std::to_string(block.back()->year));
            continue;
        }
        block.push_back(&row);
    }
    if (block.empty()) throw DataError("national series carries no income data");
    return block;
}

double income_for_estimation(const NationalRow& row) {
    // See kPerTonIncome2004: the 2004 gross figure contradicts the same
    // row's per-ton income, so estimation uses the per-ton one.
    if (row.year == 2004) return kPerTonIncome2004 * row.capacity_t;
    return *row.income_yuan;
}

} // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("FLEETCAP_DATA_DIR"); env && *env) return env;
    return FLEETCAP_DATA_DIR;
}

std::vector<YearPanel> load_bundled_panel(const std::string& dir) {
    auto in = open_or_throw(dir + "/" + kPanelFile);
    return load_panel(in);
}

NationalSeries load_bundled_national(const std::string& dir) {
    auto in = open_or_throw(dir + "/" + kNationalFile);
    auto inputs = load_national(in);
    return derive_national_series(inputs);
}

std::vector<RecordedDea> load_bundled_recorded(const std::string& dir) {
    auto in = open_or_throw(dir + "/" + kRecordedDeaFile);
    return load_recorded_dea(in);
}

std::vector<IncomeRow> estimation_income(const NationalSeries& series) {
    std::vector<IncomeRow> rows;
    for (const NationalRow* row : income_block(series))
        rows.push_back({row->year, income_for_estimation(*row)});
    return rows;
}

PdlModel fit_capacity_equation(const NationalSeries& series) {
    PdlSpec spec;  // L = 3, quadratic, far endpoint pinned
    auto block = income_block(series);
    const int L = spec.lags;
    if (static_cast<int>(block.size()) <= L + spec.degree)
        throw NumericalError("capacity equation: income block too short");

    std::vector<double> x;
    for (const NationalRow* row : block) x.push_back(income_for_estimation(*row));

    std::vector<double> y;
    for (std::size_t t = L; t < block.size(); ++t) {
        const NationalRow* prev = series.find(block[t]->year - 1);
        if (!prev)
            throw DataError("capacity equation: missing capacity for year " +
                            std::to_string(block[t]->year - 1));
        y.push_back(block[t]->capacity_t - prev->capacity_t);
    }
    return fit_pdl(y, x, spec);
}

CompoundDiffModel fit_utilization_equation(const NationalSeries& series) {
    auto block = income_block(series);
    if (block.size() < 6)
        throw NumericalError("utilization equation: income block too short");

    std::vector<double> capacity;
    for (const NationalRow* row : block) capacity.push_back(row->capacity_t);

    std::vector<double> dy;
    for (std::size_t t = 2; t < block.size(); ++t) {
        const NationalRow* prev = series.find(block[t]->year - 1);
        if (!prev)
            throw DataError("utilization equation: missing year " +
                            std::to_string(block[t]->year - 1));
        dy.push_back(block[t]->utilization - prev->utilization);
    }
    return fit_compound_diff(dy, capacity);
}

std::vector<SimYearInput> simulation_inputs(const NationalSeries& series) {
    std::vector<SimYearInput> inputs;
    for (const NationalRow* row : income_block(series))
        inputs.push_back({row->year, *row->income_yuan, row->capacity_t, row->utilization});
    return inputs;
}

CapacityEquation printed_capacity_equation() {
    CapacityEquation eq;
    eq.intercept = -4026971.665;
    eq.betas = {0.00185, 0.00006, -0.00085, -0.00087};
    return eq;
}

UtilizationEquation printed_utilization_equation() {
    UtilizationEquation eq;
    eq.intercept = 0.00835;
    eq.b1 = -0.00027;
    eq.b2 = 0.00008;
    return eq;
}

} // namespace fleetcap

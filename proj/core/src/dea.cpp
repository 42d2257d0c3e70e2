#include "fleetcap/dea.hpp"
#include "fleetcap/errors.hpp"

#include <sstream>

namespace fleetcap {

DeaResult measure_dmu(const FleetRecord& target, const YearPanel& panel,
                      const SimplexSolver& solver) {
    const std::size_t n = panel.records.size();
    DeaResult result;
    result.province = target.province;
    result.year = target.year;
    result.catch_t = target.catch_t;
    result.lambda.assign(n, 0.0);

    if (target.catch_t <= 0) {
        // No observed output to expand radially; the DMU sits at the origin
        // of output space and its capacity output is zero by convention.
        result.phi = 1.0;
        result.capacity_utilization = 1.0;
        result.capacity_output_t = 0.0;
        return result;
    }

    // Variables: x0 = phi, x1..xn = lambda.
    LinearProgram lp;
    lp.objective.assign(n + 1, 0.0);
    lp.objective[0] = 1.0;

    const auto target_inputs = target.inputs();
    for (int i = 0; i < 4; ++i) {
        Constraint row;
        row.coeffs.assign(n + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            row.coeffs[j + 1] = panel.records[j].inputs()[i];
        row.relation = Relation::LessEqual;
        row.rhs = target_inputs[i];
        lp.constraints.push_back(std::move(row));
    }
    {
        // phi * catch(target) - sum_j lambda_j catch(j) <= 0
        Constraint row;
        row.coeffs.assign(n + 1, 0.0);
        row.coeffs[0] = target.catch_t;
        for (std::size_t j = 0; j < n; ++j)
            row.coeffs[j + 1] = -panel.records[j].catch_t;
        row.relation = Relation::LessEqual;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }

    LpSolution sol = solver.solve(lp);
    if (sol.status != LpStatus::Optimal) {
        std::ostringstream msg;
        msg << "envelopment LP for " << target.province << " " << target.year
            << " did not reach a certified optimum (status "
            << static_cast<int>(sol.status) << ")";
        throw NumericalError(msg.str());
    }

    result.phi = sol.primal[0];
    result.capacity_utilization = 1.0 / result.phi;
    result.capacity_output_t = result.phi * target.catch_t;
    for (std::size_t j = 0; j < n; ++j)
        result.lambda[j] = sol.primal[j + 1];
    return result;
}

YearCapacityTable measure_year(const YearPanel& panel, const SimplexSolver& solver) {
    YearCapacityTable table;
    table.year = panel.year;
    for (const auto& record : panel.records) {
        DeaResult r = measure_dmu(record, panel, solver);
        table.total_catch_t += r.catch_t;
        table.total_capacity_t += r.capacity_output_t;
        table.results.push_back(std::move(r));
    }
    return table;
}

std::vector<YearCapacityTable> capacity_series(std::span<const YearPanel> panels,
                                               const SimplexSolver& solver) {
    std::vector<YearCapacityTable> tables;
    tables.reserve(panels.size());
    for (const auto& panel : panels)
        tables.push_back(measure_year(panel, solver));
    return tables;
}

} // namespace fleetcap

#pragma once

#include "fleetcap/lp.hpp"
#include "fleetcap/panel.hpp"

#include <span>
#include <string>
#include <vector>

namespace fleetcap {

/// Output-oriented, constant-returns-to-scale capacity measure for one DMU.
/// phi >= 1 is the largest radial expansion of the observed catch that the
/// frontier spanned by the year's peers supports at the DMU's input levels;
/// capacity_output = phi * catch, capacity_utilization = 1 / phi.
struct DeaResult {
    std::string province;
    int year = 0;
    double phi = 1.0;
    double capacity_utilization = 1.0;
    double capacity_output_t = 0;
    double catch_t = 0;
    // Peer weights lambda_j, aligned with the evaluated panel's record order.
    std::vector<double> lambda;
};

/// All DMUs of one year against that year's own frontier, plus the
/// national aggregate (sum of capacity outputs over provinces).
struct YearCapacityTable {
    int year = 0;
    std::vector<DeaResult> results;
    double total_catch_t = 0;
    double total_capacity_t = 0;

    double national_utilization() const {
        return total_capacity_t > 0 ? total_catch_t / total_capacity_t : 0;
    }
};

/// Solve the envelopment LP for `target` against the peer set `panel`
/// (which normally contains the target itself):
///
///   max  phi
///   s.t. sum_j lambda_j input_i(j) <= input_i(target)   for each input i
///        sum_j lambda_j catch(j)   >= phi catch(target)
///        lambda >= 0, phi free-positive
///
/// Throws NumericalError if the solver cannot certify an optimum.
DeaResult measure_dmu(const FleetRecord& target, const YearPanel& panel,
                      const SimplexSolver& solver = SimplexSolver{});

/// Envelopment LPs for every DMU of one year; frontiers are built per year
/// and never mix years.
YearCapacityTable measure_year(const YearPanel& panel,
                               const SimplexSolver& solver = SimplexSolver{});

/// measure_year over each panel, in year order.
std::vector<YearCapacityTable> capacity_series(std::span<const YearPanel> panels,
                                               const SimplexSolver& solver = SimplexSolver{});

} // namespace fleetcap

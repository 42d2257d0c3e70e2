#pragma once

#include "fleetcap/ols.hpp"

#include <span>

namespace fleetcap {

/// Yearly change in national capacity utilization driven by the current and
/// previous capacity increments (increments measured in 10^4 tons):
///   dG_t = intercept + b1 (B_t - B_{t-1})/1e4 + b2 (B_{t-1} - B_{t-2})/1e4
struct UtilizationEquation {
    static constexpr double kIncrementScale = 1e4;  // tons per increment unit

    double intercept = 0;
    double b1 = 0;
    double b2 = 0;

    /// Capacity levels in tons for the current and two previous years.
    double predict(double b_t, double b_prev, double b_prev2) const {
        return intercept + b1 * (b_t - b_prev) / kIncrementScale +
               b2 * (b_prev - b_prev2) / kIncrementScale;
    }
};

struct CompoundDiffModel {
    UtilizationEquation equation;
    RegressionFit fit;
};

/// Fit the utilization-increment equation by OLS. `dy[t]` is the
/// utilization change for sample year t; `capacity` carries the two
/// pre-sample levels, so capacity[2 + t] (tons) is aligned with dy[t] and
/// capacity.size() == dy.size() + 2.
CompoundDiffModel fit_compound_diff(std::span<const double> dy,
                                    std::span<const double> capacity);

} // namespace fleetcap

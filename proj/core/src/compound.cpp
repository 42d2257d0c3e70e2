#include "fleetcap/compound.hpp"
#include "fleetcap/errors.hpp"

#include <sstream>

namespace fleetcap {

CompoundDiffModel fit_compound_diff(std::span<const double> dy,
                                    std::span<const double> capacity) {
    const int n = static_cast<int>(dy.size());
    if (static_cast<int>(capacity.size()) != n + 2) {
        std::ostringstream msg;
        msg << "utilization equation: capacity series must carry 2 pre-sample "
               "levels (need " << n + 2 << ", got " << capacity.size() << ")";
        throw NumericalError(msg.str());
    }

    const double s = UtilizationEquation::kIncrementScale;
    Eigen::MatrixXd X(n, 3);
    Eigen::VectorXd y(n);
    for (int t = 0; t < n; ++t) {
        X(t, 0) = 1.0;
        X(t, 1) = (capacity[t + 2] - capacity[t + 1]) / s;
        X(t, 2) = (capacity[t + 1] - capacity[t]) / s;
        y[t] = dy[t];
    }

    CompoundDiffModel model;
    model.fit = fit_ols(X, y, {"c", "d_cap", "d_cap_lag"});
    model.equation.intercept = model.fit.coefficients[0];
    model.equation.b1 = model.fit.coefficients[1];
    model.equation.b2 = model.fit.coefficients[2];
    return model;
}

} // namespace fleetcap

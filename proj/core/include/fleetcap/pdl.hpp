#pragma once

#include "fleetcap/ols.hpp"

#include <span>
#include <vector>

namespace fleetcap {

/// Endpoint restrictions for a polynomial distributed lag: force the lag
/// polynomial to zero just before the first lag (Near, at i = -1), just
/// after the last (Far, at i = L + 1), or both.
enum class EndpointRestriction { None, Near, Far, Both };

struct PdlSpec {
    int lags = 3;       // L; lag weights beta_0 .. beta_L
    int degree = 2;     // p; beta_i is a degree-p polynomial in i
    EndpointRestriction restriction = EndpointRestriction::Far;
};

/// Linear equation for the yearly capacity increment driven by current and
/// lagged income: dB_t = intercept + sum_i beta_i x_{t-i}.
struct CapacityEquation {
    double intercept = 0;
    std::vector<double> betas;  // beta_0 (current) first

    /// `lagged[i]` is the driver at lag i (lagged[0] = current period).
    double predict(std::span<const double> lagged) const;
};

struct PdlModel {
    PdlSpec spec;
    CapacityEquation equation;
    // Reduced-form fit: intercept plus one transformed regressor per free
    // polynomial coefficient; its diagnostics apply to the lag model.
    RegressionFit fit;
};

/// Fit y_t = c + sum_{i=0..L} beta_i x_{t-i} with the lag weights tied to a
/// degree-p polynomial under the endpoint restriction. `x` must supply the
/// L pre-sample values: x[L + t] is aligned with y[t], so x.size() ==
/// y.size() + L. The restricted polynomial space is parameterized by a
/// nullspace basis of the endpoint constraints, the transformed regressors
/// are fit by OLS, and the lag weights are recovered exactly.
/// Throws NumericalError on infeasible specs (too few observations, more
/// restrictions than polynomial coefficients).
PdlModel fit_pdl(std::span<const double> y, std::span<const double> x,
                 const PdlSpec& spec = {});

} // namespace fleetcap

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace fleetcap {

/// Ordinary least squares fit with the standard diagnostic block.
/// Coefficient order matches the column order of the design matrix.
struct RegressionFit {
    std::vector<std::string> names;          // one per column
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd p_values;

    int n = 0;                               // observations
    int k = 0;                               // estimated parameters
    double r_squared = 0;
    double adj_r_squared = 0;
    double se_of_regression = 0;             // sqrt(SSR / (n - k))
    double ssr = 0;                          // sum of squared residuals
    double log_likelihood = 0;               // Gaussian, concentrated
    double aic = 0;                          // -2 LL/n + 2 k/n
    double schwarz = 0;                      // -2 LL/n + k ln(n)/n
    double durbin_watson = 0;
    double f_stat = 0;                       // overall, vs intercept-only
    double f_p_value = 0;
    double mean_dependent = 0;
    double sd_dependent = 0;

    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;

    // Set when SSR is numerically zero; inferential statistics that divide
    // by the residual variance are then meaningless and left at zero.
    bool perfect_fit = false;
};

/// Fit y = X beta + e by QR. `names` labels the columns of X (size k).
/// The F statistic compares against the intercept-only model and assumes
/// the first column of X is the constant; when `has_intercept` is false
/// the uncentered R-squared convention is used instead.
/// Throws NumericalError when n <= k or X is rank deficient.
RegressionFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                      std::vector<std::string> names, bool has_intercept = true);

} // namespace fleetcap

#include "fleetcap/ols.hpp"
#include "fleetcap/errors.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace fleetcap {

RegressionFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                      std::vector<std::string> names, bool has_intercept) {
    const int n = static_cast<int>(X.rows());
    const int k = static_cast<int>(X.cols());
    if (y.size() != n)
        throw NumericalError("regression: X and y have mismatched row counts");
    if (static_cast<int>(names.size()) != k)
        throw NumericalError("regression: one name per column required");
    if (n <= k) {
        std::ostringstream msg;
        msg << "regression: " << n << " observations cannot identify " << k << " parameters";
        throw NumericalError(msg.str());
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < k)
        throw NumericalError("regression: design matrix is rank deficient");

    RegressionFit fit;
    fit.names = std::move(names);
    fit.n = n;
    fit.k = k;
    fit.coefficients = qr.solve(y);
    fit.fitted = X * fit.coefficients;
    fit.residuals = y - fit.fitted;
    fit.ssr = fit.residuals.squaredNorm();

    fit.mean_dependent = y.mean();
    const double tss_centered = (y.array() - fit.mean_dependent).square().sum();
    fit.sd_dependent = n > 1 ? std::sqrt(tss_centered / (n - 1)) : 0.0;
    const double tss = has_intercept ? tss_centered : y.squaredNorm();

    fit.perfect_fit = fit.ssr <= 1e-12 * std::max(tss, 1.0);

    fit.r_squared = tss > 0 ? 1.0 - fit.ssr / tss : 1.0;
    fit.adj_r_squared = 1.0 - (1.0 - fit.r_squared) * (n - 1) / double(n - k);
    fit.se_of_regression = std::sqrt(fit.ssr / (n - k));

    // Concentrated Gaussian log-likelihood; undefined for an exact fit.
    if (!fit.perfect_fit) {
        fit.log_likelihood =
            -0.5 * n * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(fit.ssr / n));
        fit.aic = -2.0 * fit.log_likelihood / n + 2.0 * k / n;
        fit.schwarz = -2.0 * fit.log_likelihood / n + k * std::log(double(n)) / n;
    }

    double dw_num = 0;
    for (int t = 1; t < n; ++t) {
        const double d = fit.residuals[t] - fit.residuals[t - 1];
        dw_num += d * d;
    }
    fit.durbin_watson = fit.ssr > 0 ? dw_num / fit.ssr : 0.0;

    fit.std_errors.setZero(k);
    fit.t_stats.setZero(k);
    fit.p_values.setZero(k);
    if (!fit.perfect_fit) {
        const double sigma2 = fit.ssr / (n - k);
        // (X'X)^-1 via the pseudo-inverse from the QR factors.
        Eigen::MatrixXd pinv = qr.solve(Eigen::MatrixXd::Identity(n, n));
        Eigen::MatrixXd xtx_inv = pinv * pinv.transpose();
        boost::math::students_t tdist(n - k);
        for (int j = 0; j < k; ++j) {
            fit.std_errors[j] = std::sqrt(sigma2 * xtx_inv(j, j));
            fit.t_stats[j] = fit.coefficients[j] / fit.std_errors[j];
            fit.p_values[j] =
                2.0 * boost::math::cdf(boost::math::complement(tdist, std::abs(fit.t_stats[j])));
        }

        const int restrictions = has_intercept ? k - 1 : k;
        if (restrictions > 0 && fit.r_squared < 1.0) {
            fit.f_stat = (fit.r_squared / restrictions) /
                         ((1.0 - fit.r_squared) / (n - k));
            boost::math::fisher_f fdist(restrictions, n - k);
            fit.f_p_value = boost::math::cdf(boost::math::complement(fdist, fit.f_stat));
        }
    }
    return fit;
}

} // namespace fleetcap

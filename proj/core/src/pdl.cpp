#include "fleetcap/pdl.hpp"
#include "fleetcap/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <string>

namespace fleetcap {

double CapacityEquation::predict(std::span<const double> lagged) const {
    if (lagged.size() != betas.size())
        throw NumericalError("capacity equation: wrong number of lagged values");
    double v = intercept;
    for (std::size_t i = 0; i < betas.size(); ++i) v += betas[i] * lagged[i];
    return v;
}

namespace {

// Rows are the endpoint constraints on the polynomial coefficients
// (a_0 .. a_p): evaluate the lag polynomial at the pinned index and set it
// to zero.
Eigen::MatrixXd restriction_matrix(const PdlSpec& spec) {
    std::vector<double> points;
    if (spec.restriction == EndpointRestriction::Near ||
        spec.restriction == EndpointRestriction::Both)
        points.push_back(-1.0);
    if (spec.restriction == EndpointRestriction::Far ||
        spec.restriction == EndpointRestriction::Both)
        points.push_back(spec.lags + 1.0);
    Eigen::MatrixXd R(points.size(), spec.degree + 1);
    for (std::size_t r = 0; r < points.size(); ++r)
        for (int d = 0; d <= spec.degree; ++d)
            R(r, d) = std::pow(points[r], d);
    return R;
}

} // namespace

PdlModel fit_pdl(std::span<const double> y, std::span<const double> x, const PdlSpec& spec) {
    if (spec.lags < 0 || spec.degree < 0)
        throw NumericalError("distributed lag: lags and degree must be non-negative");
    const int L = spec.lags;
    const int n = static_cast<int>(y.size());
    if (static_cast<int>(x.size()) != n + L) {
        std::ostringstream msg;
        msg << "distributed lag: driver series must carry " << L
            << " pre-sample values (need " << n + L << ", got " << x.size() << ")";
        throw NumericalError(msg.str());
    }

    // Map free parameters theta to polynomial coefficients via a nullspace
    // basis N of the restrictions, then to lag weights via the Vandermonde
    // map P (P[i][d] = i^d): beta = P N theta.
    const int p1 = spec.degree + 1;
    Eigen::MatrixXd N;
    if (spec.restriction == EndpointRestriction::None) {
        N = Eigen::MatrixXd::Identity(p1, p1);
    } else {
        Eigen::MatrixXd R = restriction_matrix(spec);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(R);
        N = lu.kernel();
        if (N.cols() == 0 || (N.cols() == 1 && N.isZero()))
            throw NumericalError("distributed lag: restrictions leave no free polynomial");
    }
    Eigen::MatrixXd P(L + 1, p1);
    for (int i = 0; i <= L; ++i)
        for (int d = 0; d < p1; ++d)
            P(i, d) = std::pow(double(i), d);
    Eigen::MatrixXd W = P * N;  // (L+1) x q
    const int q = static_cast<int>(W.cols());

    // Transformed regressors: z_m(t) = sum_i W(i, m) x_{t-i}.
    Eigen::MatrixXd X(n, q + 1);
    Eigen::VectorXd yv(n);
    for (int t = 0; t < n; ++t) {
        X(t, 0) = 1.0;
        for (int m = 0; m < q; ++m) {
            double z = 0;
            for (int i = 0; i <= L; ++i) z += W(i, m) * x[L + t - i];
            X(t, m + 1) = z;
        }
        yv[t] = y[t];
    }

    std::vector<std::string> names;
    names.push_back("c");
    for (int m = 0; m < q; ++m) names.push_back("z" + std::to_string(m + 1));

    PdlModel model;
    model.spec = spec;
    model.fit = fit_ols(X, yv, std::move(names));
    model.equation.intercept = model.fit.coefficients[0];
    Eigen::VectorXd beta = W * model.fit.coefficients.tail(q);
    model.equation.betas.assign(beta.data(), beta.data() + beta.size());
    return model;
}

} // namespace fleetcap

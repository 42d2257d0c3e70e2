#include "fleetcap/tax_sim.hpp"
#include "fleetcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fleetcap {

ScenarioTrajectory simulate(const CapacityEquation& czl,
                            const UtilizationEquation& uzl,
                            std::span<const SimYearInput> data,
                            const TaxScenario& scenario) {
    const int L = static_cast<int>(czl.betas.size()) - 1;
    if (L < 0) throw NumericalError("simulate: capacity equation has no lag weights");
    const int seeds = std::max(L, 2);
    const int n = static_cast<int>(data.size());
    if (n <= seeds) {
        std::ostringstream msg;
        msg << "simulate: need more than " << seeds << " years of data, got " << n;
        throw DataError(msg.str());
    }
    for (int t = 1; t < n; ++t) {
        if (data[t].year != data[t - 1].year + 1) {
            std::ostringstream msg;
            msg << "simulate: years not consecutive: " << data[t - 1].year
                << " -> " << data[t].year;
            throw DataError(msg.str());
        }
    }
    if (scenario.tax_rate < 0)
        throw DataError("simulate: tax rate must be non-negative");

    const int tax_start =
        scenario.tax_start_year != 0 ? scenario.tax_start_year : data[seeds - 1].year;
    const double tau = scenario.tax_rate;

    ScenarioTrajectory traj;
    traj.tax_rate = tau;
    traj.base = scenario.base;
    traj.rows.reserve(n);

    // B, G, F by index into data; seed years carry actual values.
    std::vector<double> B(n), G(n), F(n);
    for (int t = 0; t < seeds; ++t) {
        B[t] = data[t].capacity_t;
        G[t] = data[t].utilization;
        const bool taxed = data[t].year >= tax_start;
        F[t] = data[t].income_yuan - (taxed ? tau * data[t].capacity_t : 0.0);

        ScenarioYear row;
        row.year = data[t].year;
        row.seeded = true;
        row.after_tax_income = F[t];
        row.capacity_t = B[t];
        row.utilization = G[t];
        row.catch_t = B[t] * G[t];
        traj.rows.push_back(row);
    }
    traj.seed_capacity_t = B[seeds - 1];

    const double beta0 = czl.betas[0];
    for (int t = seeds; t < n; ++t) {
        const bool taxed = data[t].year >= tax_start;
        double lag_sum = czl.intercept;  // contribution of everything but F_t
        for (int i = 1; i <= L; ++i) lag_sum += czl.betas[i] * F[t - i];

        if (!taxed || scenario.base == TaxBase::ActualCapacity) {
            F[t] = data[t].income_yuan - (taxed ? tau * data[t].capacity_t : 0.0);
            B[t] = B[t - 1] + lag_sum + beta0 * F[t];
        } else {
            // F_t depends on the B_t being computed; solve the linear
            // fixed point: B_t (1 + beta0 tau) = B_{t-1} + lag_sum + beta0 D_t.
            const double denom = 1.0 + beta0 * tau;
            if (std::abs(denom) < 1e-12) {
                std::ostringstream msg;
                msg << "simulate: tax feedback is singular in " << data[t].year
                    << " (1 + beta0 * tau = " << denom << ")";
                throw NumericalError(msg.str());
            }
            B[t] = (B[t - 1] + lag_sum + beta0 * data[t].income_yuan) / denom;
            F[t] = data[t].income_yuan - tau * B[t];
        }

        double g = G[t - 1] + uzl.predict(B[t], B[t - 1], B[t - 2]);
        const double clamped = std::clamp(g, kMinUtilization, kMaxUtilization);
        ScenarioYear row;
        row.year = data[t].year;
        row.after_tax_income = F[t];
        row.capacity_t = B[t];
        row.utilization = clamped;
        row.catch_t = B[t] * clamped;
        row.utilization_clamped = clamped != g;
        if (row.utilization_clamped) {
            std::ostringstream msg;
            msg << "utilization " << g << " in " << data[t].year << " clamped to "
                << clamped << " at tax rate " << tau;
            traj.warnings.push_back(msg.str());
        }
        G[t] = clamped;
        traj.rows.push_back(row);
    }
    return traj;
}

std::vector<SweepPoint> sweep(const CapacityEquation& czl,
                              const UtilizationEquation& uzl,
                              std::span<const SimYearInput> data,
                              std::span<const double> rates,
                              TaxBase base) {
    std::vector<SweepPoint> points;
    points.reserve(rates.size());
    for (double rate : rates) {
        TaxScenario scenario;
        scenario.tax_rate = rate;
        scenario.base = base;
        ScenarioTrajectory traj = simulate(czl, uzl, data, scenario);
        points.push_back({rate, traj.curtailment(), traj.rows.back().capacity_t});
    }
    return points;
}

} // namespace fleetcap

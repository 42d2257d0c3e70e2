#pragma once

#include "fleetcap/compound.hpp"
#include "fleetcap/pdl.hpp"

#include <span>
#include <string>
#include <vector>

namespace fleetcap {

/// Which capacity level the per-ton tax bill is assessed on: the historical
/// (actual) capacity path, or the capacity path the scenario itself
/// produces. The latter makes the tax feed back into the recursion and is
/// solved in closed form year by year.
enum class TaxBase { ActualCapacity, SimulatedCapacity };

struct TaxScenario {
    double tax_rate = 0;            // yuan per capacity ton per year
    TaxBase base = TaxBase::ActualCapacity;
    // First year the tax is levied; 0 means the default (the last seed
    // year, so the first simulated year already sees one taxed lag).
    int tax_start_year = 0;
};

/// One year of observed national data feeding the simulator.
struct SimYearInput {
    int year = 0;
    double income_yuan = 0;   // gross fishing income D
    double capacity_t = 0;    // capacity output B, tons
    double utilization = 0;   // capacity utilization G
};

struct ScenarioYear {
    int year = 0;
    bool seeded = false;            // actual values carried over, not simulated
    double after_tax_income = 0;    // F = D - tax
    double capacity_t = 0;          // simulated B
    double utilization = 0;         // simulated G (clamped to [0.01, 1])
    double catch_t = 0;             // simulated A = B * G
    bool utilization_clamped = false;
};

struct ScenarioTrajectory {
    double tax_rate = 0;
    TaxBase base = TaxBase::ActualCapacity;
    std::vector<ScenarioYear> rows;
    std::vector<std::string> warnings;
    double seed_capacity_t = 0;     // capacity in the last seed year

    /// Fractional capacity reduction from the last seed year to the final
    /// simulated year: 1 - B_end / B_seed.
    double curtailment() const {
        return rows.empty() || seed_capacity_t <= 0
                   ? 0.0
                   : 1.0 - rows.back().capacity_t / seed_capacity_t;
    }
};

inline constexpr double kMinUtilization = 0.01;
inline constexpr double kMaxUtilization = 1.0;

/// Run the capacity/utilization recursion under a per-ton tax. The first
/// max(L, 2) years of `data` (L = lag depth of `czl`) seed the recursion
/// with actual values; each later year applies
///   F_t = D_t - tau * B(base)_t        (tax from tax_start_year on)
///   B_t = B_{t-1} + czl(F_t .. F_{t-L})
///   G_t = clamp(G_{t-1} + uzl(B_t, B_{t-1}, B_{t-2}), 0.01, 1)
/// Clamping is reported in `warnings`. Years must be consecutive; throws
/// DataError on gaps or too few rows, NumericalError if the simulated-base
/// feedback makes a year's capacity equation singular.
ScenarioTrajectory simulate(const CapacityEquation& czl,
                            const UtilizationEquation& uzl,
                            std::span<const SimYearInput> data,
                            const TaxScenario& scenario);

struct SweepPoint {
    double tax_rate = 0;
    double curtailment = 0;
    double final_capacity_t = 0;
};

/// simulate() over a grid of tax rates, in the order given.
std::vector<SweepPoint> sweep(const CapacityEquation& czl,
                              const UtilizationEquation& uzl,
                              std::span<const SimYearInput> data,
                              std::span<const double> rates,
                              TaxBase base = TaxBase::ActualCapacity);

} // namespace fleetcap

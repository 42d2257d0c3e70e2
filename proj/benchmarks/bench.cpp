#include <benchmark/benchmark.h>

#include "fleetcap/dea.hpp"
#include "fleetcap/fixtures.hpp"
#include "fleetcap/tax_sim.hpp"

using namespace fleetcap;

namespace {

const std::vector<YearPanel>& panels() {
    static const std::vector<YearPanel> p = load_bundled_panel();
    return p;
}

const NationalSeries& national() {
    static const NationalSeries s = load_bundled_national();
    return s;
}

void bm_envelopment_lp(benchmark::State& state) {
    const YearPanel& panel = panels().front();
    const FleetRecord& target = panel.records.front();
    for (auto _ : state) {
        auto r = measure_dmu(target, panel);
        benchmark::DoNotOptimize(r.phi);
    }
}
BENCHMARK(bm_envelopment_lp);

void bm_measure_year(benchmark::State& state) {
    const YearPanel& panel = panels().front();
    for (auto _ : state) {
        auto table = measure_year(panel);
        benchmark::DoNotOptimize(table.total_capacity_t);
    }
}
BENCHMARK(bm_measure_year);

void bm_full_capacity_series(benchmark::State& state) {
    for (auto _ : state) {
        auto tables = capacity_series(panels());
        benchmark::DoNotOptimize(tables.size());
    }
}
BENCHMARK(bm_full_capacity_series);

void bm_fit_both_equations(benchmark::State& state) {
    for (auto _ : state) {
        auto capacity = fit_capacity_equation(national());
        auto utilization = fit_utilization_equation(national());
        benchmark::DoNotOptimize(capacity.equation.intercept);
        benchmark::DoNotOptimize(utilization.equation.intercept);
    }
}
BENCHMARK(bm_fit_both_equations);

void bm_sweep_grid(benchmark::State& state) {
    const auto czl = fit_capacity_equation(national()).equation;
    const auto uzl = fit_utilization_equation(national()).equation;
    const auto inputs = simulation_inputs(national());
    std::vector<double> rates;
    for (int r = 0; r <= 150; r += 5) rates.push_back(r);
    for (auto _ : state) {
        auto points = sweep(czl, uzl, inputs, rates);
        benchmark::DoNotOptimize(points.back().curtailment);
    }
}
BENCHMARK(bm_sweep_grid);

} // namespace

BENCHMARK_MAIN();

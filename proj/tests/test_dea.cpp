#include "doctest.h"

#include "fleetcap/dea.hpp"
#include "fleetcap/fixtures.hpp"

#include <cmath>
#include <random>

using namespace fleetcap;

namespace {

FleetRecord make_record(std::string province, double v, double t, double p, double l,
                        double c, int year = 2000) {
    FleetRecord r;
    r.province = std::move(province);
    r.year = year;
    r.vessels = v;
    r.tonnage = t;
    r.power = p;
    r.labor = l;
    r.catch_t = c;
    return r;
}

YearPanel make_panel(std::vector<FleetRecord> records, int year = 2000) {
    YearPanel p;
    p.year = year;
    p.records = std::move(records);
    return p;
}

std::vector<YearPanel> random_panels(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> size(2, 5);
    std::uniform_real_distribution<double> input(1.0, 100.0), output(1.0, 50.0);
    std::vector<YearPanel> panels;
    for (int i = 0; i < count; ++i) {
        std::vector<FleetRecord> recs;
        const int n = size(rng);
        for (int j = 0; j < n; ++j)
            recs.push_back(make_record("P" + std::to_string(j), input(rng), input(rng),
                                       input(rng), input(rng), output(rng)));
        panels.push_back(make_panel(std::move(recs)));
    }
    return panels;
}

} // namespace

TEST_CASE("two-unit frontier: the dominated unit doubles") {
    auto panel = make_panel({make_record("A", 1, 1, 1, 1, 1),
                             make_record("B", 1, 1, 1, 1, 2)});
    auto a = measure_dmu(panel.records[0], panel);
    auto b = measure_dmu(panel.records[1], panel);
    CHECK(a.phi == doctest::Approx(2.0));
    CHECK(a.capacity_utilization == doctest::Approx(0.5));
    CHECK(a.capacity_output_t == doctest::Approx(2.0));
    CHECK(b.phi == doctest::Approx(1.0));
    CHECK(b.capacity_utilization == doctest::Approx(1.0));
}

TEST_CASE("a lone unit is its own frontier") {
    auto panel = make_panel({make_record("Only", 5, 50, 20, 9, 123.0)});
    auto r = measure_dmu(panel.records[0], panel);
    CHECK(r.phi == doctest::Approx(1.0));
    CHECK(r.capacity_output_t == doctest::Approx(123.0));
}

TEST_CASE("zero catch yields zero capacity") {
    auto panel = make_panel({make_record("Idle", 1, 1, 1, 1, 0),
                             make_record("Busy", 1, 1, 1, 1, 5)});
    auto r = measure_dmu(panel.records[0], panel);
    CHECK(r.phi == 1.0);
    CHECK(r.capacity_output_t == 0.0);
}

TEST_CASE("identical inputs: phi is the catch ratio to the best peer") {
    // All inputs equal makes the technology effectively single-input; the
    // frontier unit is the one with the highest catch.
    auto panel = make_panel({make_record("A", 3, 3, 3, 3, 2),
                             make_record("B", 3, 3, 3, 3, 6),
                             make_record("C", 3, 3, 3, 3, 3)});
    CHECK(measure_dmu(panel.records[0], panel).phi == doctest::Approx(3.0));
    CHECK(measure_dmu(panel.records[1], panel).phi == doctest::Approx(1.0));
    CHECK(measure_dmu(panel.records[2], panel).phi == doctest::Approx(2.0));
}

TEST_CASE("single effective input: closed-form CRS ratio oracle") {
    // With proportional input bundles (x, x, x, x), the CRS frontier score
    // is phi = x_0 * max_j(y_j / x_j) / y_0.
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> xs(1.0, 20.0), ys(1.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FleetRecord> recs;
        const int n = 4;
        for (int j = 0; j < n; ++j) {
            double x = xs(rng);
            recs.push_back(make_record("P" + std::to_string(j), x, x, x, x, ys(rng)));
        }
        auto panel = make_panel(recs);
        double best = 0;
        for (const auto& r : recs) best = std::max(best, r.catch_t / r.vessels);
        for (const auto& r : recs) {
            double expect = best * r.vessels / r.catch_t;
            CHECK(measure_dmu(r, panel).phi == doctest::Approx(expect).epsilon(1e-8));
        }
    }
}

TEST_CASE("units invariance and dominance on random panels") {
    std::mt19937 rng(20250401);
    auto panels = random_panels(rng, 60);
    for (auto& panel : panels) {
        auto table = measure_year(panel);
        for (const auto& r : table.results) {
            CHECK(r.phi >= 1.0 - 1e-9);                         // dominance
            CHECK(r.capacity_output_t >= r.catch_t - 1e-9);     // capacity >= catch
            CHECK(r.capacity_utilization <= 1.0 + 1e-9);
        }
        // Rescale one input column: scores must not move.
        YearPanel scaled = panel;
        for (auto& rec : scaled.records) rec.power *= 1000.0;
        auto scaled_table = measure_year(scaled);
        for (std::size_t i = 0; i < table.results.size(); ++i)
            CHECK(scaled_table.results[i].phi ==
                  doctest::Approx(table.results[i].phi).epsilon(1e-7));
    }
}

TEST_CASE("adding a dominated unit never changes the frontier") {
    std::mt19937 rng(31);
    auto panels = random_panels(rng, 20);
    for (auto& panel : panels) {
        auto before = measure_year(panel);
        YearPanel extended = panel;
        FleetRecord dominated = panel.records[0];
        dominated.province = "Dominated";
        dominated.vessels *= 2;
        dominated.tonnage *= 2;
        dominated.power *= 2;
        dominated.labor *= 2;
        dominated.catch_t *= 0.5;
        extended.records.push_back(dominated);
        auto after = measure_year(extended);
        for (std::size_t i = 0; i < panel.records.size(); ++i)
            CHECK(after.results[i].phi ==
                  doctest::Approx(before.results[i].phi).epsilon(1e-8));
    }
}

TEST_CASE("published per-province capacity columns are reproduced") {
    auto panels = load_bundled_panel();
    const YearPanel* p1993 = nullptr;
    const YearPanel* p1994 = nullptr;
    for (const auto& p : panels) {
        if (p.year == 1993) p1993 = &p;
        if (p.year == 1994) p1994 = &p;
    }
    REQUIRE(p1993);
    REQUIRE(p1994);

    auto tianjing = measure_dmu(*p1993->find("Tianjing"), *p1993);
    CHECK(std::abs(tianjing.capacity_utilization - 0.334) <= 0.001);
    CHECK(std::abs(tianjing.capacity_output_t - 49156.24) / 49156.24 <= 0.005);

    auto shanghai = measure_dmu(*p1994->find("Shanghai"), *p1994);
    CHECK(shanghai.phi == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(shanghai.capacity_output_t == doctest::Approx(83177.0).epsilon(1e-9));

    auto table_1994 = measure_year(*p1994);
    CHECK(std::abs(table_1994.total_capacity_t - 10304461.0) / 10304461.0 <= 0.005);
    CHECK(table_1994.total_catch_t == doctest::Approx(8270574.0));
}

TEST_CASE("peer weights reconstruct the capacity point") {
    auto panels = load_bundled_panel();
    const YearPanel& panel = panels.front();
    auto table = measure_year(panel);
    for (const auto& r : table.results) {
        double peer_output = 0;
        for (std::size_t j = 0; j < r.lambda.size(); ++j)
            peer_output += r.lambda[j] * panel.records[j].catch_t;
        CHECK(peer_output >= r.capacity_output_t * (1 - 1e-7));
        for (int i = 0; i < 4; ++i) {
            double peer_input = 0;
            for (std::size_t j = 0; j < r.lambda.size(); ++j)
                peer_input += r.lambda[j] * panel.records[j].inputs()[i];
            const FleetRecord* self = panel.find(r.province);
            CHECK(peer_input <= self->inputs()[i] * (1 + 1e-7) + 1e-9);
        }
    }
}

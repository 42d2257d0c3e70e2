#include "doctest.h"

#include "fleetcap/errors.hpp"
#include "fleetcap/fixtures.hpp"
#include "fleetcap/panel.hpp"
#include "fleetcap/validation.hpp"

#include <cmath>
#include <sstream>

using namespace fleetcap;

namespace {

std::vector<YearPanel> panels_from(const std::string& csv) {
    std::istringstream in(csv);
    return load_panel(in);
}

} // namespace

TEST_CASE("panel parsing") {
    SUBCASE("basic load with header") {
        auto panels = panels_from(
            "province,year,vessels,tonnage,power,labor,catch\n"
            "North,1999,10,100,200,50,1234.5\n"
            "South,1999,20,300,400,60,2000\n"
            "North,2000,11,101,201,51,1300\n");
        REQUIRE(panels.size() == 2);
        CHECK(panels[0].year == 1999);
        REQUIRE(panels[0].records.size() == 2);
        const FleetRecord* north = panels[0].find("North");
        REQUIRE(north);
        CHECK(north->catch_t == 1234.5);
        CHECK(north->inputs() == std::array<double, 4>{10, 100, 200, 50});
        CHECK(panels[1].find("South") == nullptr);
    }
    SUBCASE("empty stream yields empty panel set") {
        CHECK(panels_from("").empty());
    }
    SUBCASE("field count mismatch") {
        CHECK_THROWS_AS(panels_from("North,1999,10,100,200,50\n"), DataError);
    }
    SUBCASE("non-numeric field names the line") {
        try {
            panels_from("province,year,vessels,tonnage,power,labor,catch\n"
                        "North,1999,10,abc,200,50,100\n");
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("tonnage") != std::string::npos);
        }
    }
    SUBCASE("negative value rejected") {
        CHECK_THROWS_AS(panels_from("North,1999,-1,100,200,50,100\n"), DataError);
    }
    SUBCASE("duplicate province-year rejected") {
        CHECK_THROWS_AS(panels_from("North,1999,10,100,200,50,100\n"
                                    "North,1999,10,100,200,50,100\n"),
                        DataError);
    }
    SUBCASE("fractional year rejected") {
        CHECK_THROWS_AS(panels_from("North,1999.5,10,100,200,50,100\n"), DataError);
    }
}

TEST_CASE("panel round-trips byte-identically") {
    auto panels = load_bundled_panel();
    REQUIRE(panels.size() == 13);
    for (const auto& p : panels) CHECK(p.records.size() == 11);

    std::ostringstream first;
    write_panel(first, panels);
    std::istringstream back(first.str());
    auto reloaded = load_panel(back);
    std::ostringstream second;
    write_panel(second, reloaded);
    CHECK(first.str() == second.str());

    REQUIRE(reloaded.size() == panels.size());
    for (std::size_t i = 0; i < panels.size(); ++i)
        for (std::size_t j = 0; j < panels[i].records.size(); ++j) {
            CHECK(panels[i].records[j].province == reloaded[i].records[j].province);
            CHECK(panels[i].records[j].catch_t == reloaded[i].records[j].catch_t);
            CHECK(panels[i].records[j].tonnage == reloaded[i].records[j].tonnage);
        }
}

TEST_CASE("derived national series matches the published derived columns") {
    auto series = load_bundled_national();
    REQUIRE(series.rows.size() == 13);

    const NationalRow* y1993 = series.find(1993);
    REQUIRE(y1993);
    CHECK(!y1993->income_yuan);
    CHECK(!y1993->capacity_increment);
    CHECK(y1993->utilization == doctest::Approx(0.819).epsilon(0.001));

    const NationalRow* y1994 = series.find(1994);
    REQUIRE(y1994);
    REQUIRE(y1994->capacity_increment);
    CHECK(*y1994->capacity_increment == doctest::Approx(1649989.47).epsilon(1e-8));
    CHECK(*y1994->income_per_capacity_ton == doctest::Approx(662.5).epsilon(0.001));
    CHECK(*y1994->income_per_catch_ton == doctest::Approx(825.4).epsilon(0.001));
    CHECK(y1994->utilization == doctest::Approx(0.803).epsilon(0.001));
    CHECK(std::abs(*y1994->utilization_increment - (-0.016)) <= 5e-4);

    const NationalRow* y1996 = series.find(1996);
    REQUIRE(y1996);
    CHECK(std::abs(*y1996->capacity_increment - 4445793.94) <= 0.01);
}

TEST_CASE("national series input validation") {
    SUBCASE("gap in years") {
        std::vector<NationalInput> rows = {{1999, 1, 2, {}}, {2001, 1, 2, {}}};
        CHECK_THROWS_AS(derive_national_series(rows), DataError);
    }
    SUBCASE("non-positive capacity") {
        std::vector<NationalInput> rows = {{1999, 1, 0, {}}};
        CHECK_THROWS_AS(derive_national_series(rows), DataError);
    }
    SUBCASE("income column may be empty") {
        std::istringstream in("year,catch_t,capacity_t,income_yuan\n1999,10,20,\n");
        auto rows = load_national(in);
        REQUIRE(rows.size() == 1);
        CHECK(!rows[0].income_yuan);
    }
}

TEST_CASE("format_number writes shortest round-trip decimals") {
    CHECK(format_number(1234.5) == "1234.5");
    CHECK(format_number(49156.24) == "49156.24");
    CHECK(format_number(16442) == "16442");
}

TEST_CASE("data-quality validation flags the known anomalies") {
    auto panels = load_bundled_panel();
    auto recorded = load_bundled_recorded();
    auto findings = validate_panel(panels, recorded, {});

    bool hainan_2003 = false, sandong_2003 = false, jiangshu_labor = false;
    for (const auto& f : findings) {
        if (f.rule == "recorded-inconsistency" && f.year == 2003 && f.province == "Hainan")
            hainan_2003 = true;
        if (f.rule == "recorded-inconsistency" && f.year == 2003 && f.province == "Sandong")
            sandong_2003 = true;
        if (f.rule == "scale-jump" && f.year == 1994 && f.province == "Jiangshu" &&
            f.detail.find("labor") != std::string::npos)
            jiangshu_labor = true;
    }
    CHECK(hainan_2003);
    CHECK(sandong_2003);
    CHECK(jiangshu_labor);

    // Deterministic: repeated runs produce the same ordered findings.
    auto again = validate_panel(panels, recorded, {});
    REQUIRE(findings.size() == again.size());
    for (std::size_t i = 0; i < findings.size(); ++i) {
        CHECK(findings[i].rule == again[i].rule);
        CHECK(findings[i].detail == again[i].detail);
    }
}

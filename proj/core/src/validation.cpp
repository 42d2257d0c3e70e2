#include "fleetcap/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace fleetcap {

namespace {

struct FieldRef {
    const char* name;
    double FleetRecord::* member;
};

constexpr FieldRef kFields[] = {
    {"vessels", &FleetRecord::vessels},
    {"tonnage", &FleetRecord::tonnage},
    {"power", &FleetRecord::power},
    {"labor", &FleetRecord::labor},
    {"catch", &FleetRecord::catch_t},
};

} // namespace

std::vector<Finding> validate_panel(std::span<const YearPanel> panels,
                                    std::span<const RecordedDea> recorded,
                                    const ValidationOptions& options) {
    std::vector<Finding> findings;

    // (i) recorded CU x recorded capacity output vs recorded catch
    for (const auto& rec : recorded) {
        const FleetRecord* obs = nullptr;
        for (const auto& panel : panels) {
            if (panel.year != rec.year) continue;
            obs = panel.find(rec.province);
            break;
        }
        if (!obs || obs->catch_t <= 0) continue;
        double implied_catch = rec.cu * rec.capacity_output_t;
        double rel = std::abs(implied_catch - obs->catch_t) / obs->catch_t;
        double tol = rec.cu >= 1.0 ? options.frontier_consistency_tol
                                   : options.consistency_tol;
        if (rel > tol) {
            std::ostringstream detail;
            detail << "recorded cu " << rec.cu << " x capacity " << rec.capacity_output_t
                   << " implies catch " << implied_catch << " but catch is " << obs->catch_t
                   << " (" << rel * 100 << "% off)";
            findings.push_back({rec.year, rec.province, "recorded-inconsistency", detail.str()});
        }
    }

    // (ii) year-over-year scale jumps per province and field
    std::map<std::string, std::vector<const FleetRecord*>> by_province;
    for (const auto& panel : panels)
        for (const auto& r : panel.records)
            by_province[r.province].push_back(&r);
    for (auto& [province, recs] : by_province) {
        std::sort(recs.begin(), recs.end(),
                  [](const FleetRecord* a, const FleetRecord* b) { return a->year < b->year; });
        for (std::size_t i = 1; i < recs.size(); ++i) {
            if (recs[i]->year != recs[i - 1]->year + 1) continue;
            for (const auto& field : kFields) {
                double prev = recs[i - 1]->*field.member;
                double cur = recs[i]->*field.member;
                if (prev <= 0 || cur <= 0) continue;
                double ratio = std::max(prev, cur) / std::min(prev, cur);
                if (ratio > options.jump_factor) {
                    std::ostringstream detail;
                    detail << field.name << " jumped " << prev << " -> " << cur
                           << " (" << ratio << "x) from " << recs[i - 1]->year;
                    findings.push_back({recs[i]->year, province, "scale-jump", detail.str()});
                }
            }
        }
    }

    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.year, a.province, a.rule) < std::tie(b.year, b.province, b.rule);
    });
    return findings;
}

} // namespace fleetcap

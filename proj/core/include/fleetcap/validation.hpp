#pragma once

#include "fleetcap/panel.hpp"

#include <span>
#include <string>
#include <vector>

namespace fleetcap {

struct Finding {
    int year = 0;
    std::string province;
    std::string rule;    // "recorded-inconsistency" | "scale-jump"
    std::string detail;
};

struct ValidationOptions {
    // Recorded utilization x recorded capacity output must agree with the
    // recorded catch within this relative tolerance. The loose default
    // absorbs the three-decimal rounding of the recorded utilization.
    double consistency_tol = 0.01;
    // When the recorded utilization is exactly 1 there is no rounding in
    // it: capacity and catch are the same number, so only serialization
    // noise is tolerated.
    double frontier_consistency_tol = 0.001;
    // Year-over-year per-field ratio beyond which a jump is flagged.
    double jump_factor = 5.0;
};

/// Pure data-quality report over the raw panel and the recorded DEA columns
/// of the source tables. Never mutates its inputs; same input, same report.
std::vector<Finding> validate_panel(std::span<const YearPanel> panels,
                                    std::span<const RecordedDea> recorded,
                                    const ValidationOptions& options = {});

} // namespace fleetcap

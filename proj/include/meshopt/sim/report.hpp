#pragma once

#include <cmath>
#include <vector>

namespace meshopt::sim {

// One row of the per-plant dispatch report.
struct HourlyReportRow {
    int hour = 0;
    double demand_required = 0.0;    // DR, MW
    double demand_produced = 0.0;    // DP, MW
    double error = 0.0;              // E = |DP - DR|, MW
    double usual_discharge = 0.0;    // UWD, m3/s, equal-split baseline
    double optimized_discharge = 0.0;// OWD, m3/s
    double saved_water = 0.0;        // SW = UWD - OWD, m3/s
};

struct PlantReport {
    std::vector<HourlyReportRow> rows;

    double total_saved_water() const {
        double acc = 0.0;
        for (const auto& r : rows) acc += r.saved_water;
        return acc;
    }
    // One m3/s sustained for an hour is 3.6 million liters.
    double total_saved_liters_per_day() const { return total_saved_water() * 3.6e6; }
};

}  // namespace meshopt::sim

#pragma once

#include <vector>

#include "meshopt/hydro/dispatch.hpp"

namespace meshopt::hydro {

// Bundled two-plant cascade study: an upstream plant with 8 units (528 MW)
// feeding a downstream plant with 6 units (396 MW) after a 2 hour routing
// delay, identical reservoirs of 4250..19528 hm3.
//
// The level polynomials and the rho1, rho2, rho3, rho5 efficiency terms are
// the published plant fit. rho4 is read as -1.12e-4: the printed magnitude
// would make power fall as head rises anywhere near the operating head, which
// lets the optimizer "gain" by spilling. rho0 and the penstock loss are
// calibrated per plant so that the equal-split dispatch of the rated hour-0
// demands (330 MW / 264 MW at 80% storage) reproduces the recorded total
// discharges (705.81 and 573.59 m3/s) and unit efficiencies stay inside the
// 0.90..0.94 band across the daily demand range.
inline SystemParameters case_study_system() {
    SystemParameters system;
    PlantParameters u1;
    u1.id = "u1";
    u1.unit_count = 8;
    u1.upstream_coeffs = {5.30e2, 6.30e-3, -4.84e-7, 2.20e-11, -3.84e-16};
    u1.downstream_coeffs = {5.15e2, 1.61e-3, -2.55e-7, 2.89e-11, -1.18e-15};
    u1.efficiency_coeffs = {0.113022, 1.80e-2, 5.05e-3, -3.52e-5, -1.12e-4, -1.45e-5};
    u1.turbine_flow_min = 50.0;
    u1.turbine_flow_max = 150.0;
    u1.unit_power_min = 35.0;
    u1.unit_power_max = 66.0;
    u1.defluent_min = 400.0;
    u1.defluent_max = 2500.0;
    u1.spill_max = 2500.0;
    u1.reservoir_min = 4250.0;
    u1.reservoir_max = 19528.0;
    u1.penstock_loss = 3.28;
    u1.capacity = 528.0;

    PlantParameters u2 = u1;
    u2.id = "u2";
    u2.unit_count = 6;
    u2.efficiency_coeffs = {0.126530, 1.80e-2, 5.05e-3, -3.52e-5, -1.12e-4, -1.45e-5};
    u2.penstock_loss = 4.97;
    u2.capacity = 396.0;

    system.plants = {u1, u2};
    system.routing_delay_hours = 2;
    system.penalty_factor = 0.5;
    return system;
}

// 24 hours of inflow (Qa, m3/s) and demand (Dm, MW) per plant; historical data
// from a low-precipitation period.
struct HourlyData {
    int hour;
    double inflow_u1;
    double demand_u1;
    double inflow_u2;
    double demand_u2;
};

inline const std::vector<HourlyData>& case_study_day() {
    static const std::vector<HourlyData> day = {
        {0, 102, 330, 208, 264},  {1, 102, 330, 289, 264},  {2, 103, 330, 297, 264},
        {3, 105, 322, 192, 258},  {4, 221, 322, 201, 258},  {5, 223, 330, 204, 264},
        {6, 110, 330, 218, 264},  {7, 227, 330, 227, 264},  {8, 114, 305, 343, 240},
        {9, 228, 305, 343, 235},  {10, 227, 305, 228, 235}, {11, 227, 305, 235, 235},
        {12, 341, 305, 228, 235}, {13, 341, 305, 114, 240}, {14, 340, 305, 114, 235},
        {15, 340, 305, 114, 240}, {16, 339, 305, 114, 235}, {17, 227, 305, 114, 235},
        {18, 236, 420, 230, 336}, {19, 245, 437, 229, 343}, {20, 253, 437, 225, 343},
        {21, 376, 437, 115, 343}, {22, 376, 437, 109, 343}, {23, 385, 445, 223, 349}};
    return day;
}

}  // namespace meshopt::hydro

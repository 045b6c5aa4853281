#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshopt::hydro {

// Gravity times the horsepower-to-megawatt conversion: power in MW is
// 9.8e-3 * eta * head * flow.
inline constexpr double kGravityMw = 9.8e-3;

// Converts a flow sustained for one hour (m3/s) into a volume (hm3):
// 3600 s/h divided by 1e6 m3/hm3.
inline constexpr double kFlowToVolume = 0.0036;

// Static description of one plant: level polynomials, the unit efficiency
// surface and all operating bounds. Units: volumes hm3, flows m3/s, levels and
// heads m, power MW.
struct PlantParameters {
    std::string id;
    std::size_t unit_count = 0;                  // J_u
    std::array<double, 5> upstream_coeffs{};     // a0..a4, level vs volume
    std::array<double, 5> downstream_coeffs{};   // b0..b4, level vs total outflow
    std::array<double, 6> efficiency_coeffs{};   // rho0..rho5
    double turbine_flow_min = 0.0;               // Qt bounds per unit
    double turbine_flow_max = 0.0;
    double unit_power_min = 0.0;                 // ph bounds per unit
    double unit_power_max = 0.0;
    double defluent_min = 0.0;                   // Qd bounds, total outflow
    double defluent_max = 0.0;
    double spill_max = 0.0;                      // Qv_max
    double reservoir_min = 0.0;                  // psi bounds
    double reservoir_max = 0.0;
    double penstock_loss = 0.0;                  // Delta_H
    double capacity = 0.0;                       // MW, informational

    void validate() const {
        if (unit_count < 1) throw std::invalid_argument(id + ": unit_count must be >= 1");
        const auto ordered = [&](double lo, double hi, const char* what) {
            if (lo > hi)
                throw std::invalid_argument(id + ": " + what + " bounds out of order");
        };
        ordered(turbine_flow_min, turbine_flow_max, "turbine_flow");
        ordered(unit_power_min, unit_power_max, "unit_power");
        ordered(defluent_min, defluent_max, "defluent");
        ordered(reservoir_min, reservoir_max, "reservoir");
        if (spill_max < 0) throw std::invalid_argument(id + ": spill_max must be >= 0");
        if (penstock_loss < 0) throw std::invalid_argument(id + ": penstock_loss must be >= 0");
    }
};

namespace detail {
template <std::size_t N>
inline double horner(const std::array<double, N>& c, double x) {
    double acc = c[N - 1];
    for (std::size_t k = N - 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
}
}  // namespace detail

// Upstream (forebay) level from reservoir volume, quartic in psi.
inline double upstream_level(const PlantParameters& plant, double volume) {
    return detail::horner(plant.upstream_coeffs, volume);
}

// Downstream (tailrace) level from total outflow, quartic in Q.
inline double downstream_level(const PlantParameters& plant, double total_outflow) {
    return detail::horner(plant.downstream_coeffs, total_outflow);
}

// Net head: gross head minus penstock losses. May come out non-positive for
// absurd states; callers treat that as an infeasible-physics signal.
inline double net_head(const PlantParameters& plant, double volume, double total_outflow) {
    return upstream_level(plant, volume) - downstream_level(plant, total_outflow) -
           plant.penstock_loss;
}

// Unit efficiency surface evaluated at (net head, unit flow).
inline double unit_efficiency(const PlantParameters& plant, double head, double unit_flow) {
    const auto& r = plant.efficiency_coeffs;
    return r[0] + r[1] * head + r[2] * unit_flow + r[3] * head * unit_flow +
           r[4] * head * head + r[5] * unit_flow * unit_flow;
}

// Power of one unit in MW: g k [rho polynomial] * head * flow. Zero flow
// produces zero power.
inline double unit_power(const PlantParameters& plant, double unit_flow, double volume,
                         double total_outflow) {
    if (unit_flow == 0.0) return 0.0;
    const double head = net_head(plant, volume, total_outflow);
    return kGravityMw * unit_efficiency(plant, head, unit_flow) * head * unit_flow;
}

}  // namespace meshopt::hydro

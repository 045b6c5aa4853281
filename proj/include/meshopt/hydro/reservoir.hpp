#pragma once

#include <deque>
#include <stdexcept>

#include "meshopt/hydro/plant.hpp"

namespace meshopt::hydro {

// Evolving water state of one plant: current volume plus the queue of upstream
// releases still travelling downriver. A release pushed with delay d becomes
// this reservoir's arrival exactly d hours later.
class ReservoirState {
public:
    ReservoirState() = default;
    explicit ReservoirState(double volume) : volume_(volume) {}

    double volume() const { return volume_; }
    int hour() const { return hour_; }

    // Upstream release arriving at the current hour.
    double pending_arrival() const { return pending_.empty() ? 0.0 : pending_.front(); }

    // A release pushed during hour t becomes pending_arrival() after exactly
    // delay_hours advances, i.e. while hour t + delay_hours is being processed.
    void push_upstream_release(double flow, int delay_hours) {
        if (flow < 0) throw std::invalid_argument("upstream release must be nonnegative");
        if (delay_hours < 1) throw std::invalid_argument("routing delay must be >= 1 hour");
        const std::size_t slot = static_cast<std::size_t>(delay_hours);
        if (pending_.size() <= slot) pending_.resize(slot + 1, 0.0);
        pending_[slot] += flow;
    }

    // Applies one hour of water balance and advances the arrival queue.
    void advance(double new_volume) {
        volume_ = new_volume;
        if (!pending_.empty()) pending_.pop_front();
        ++hour_;
    }

private:
    double volume_ = 0.0;
    int hour_ = 0;
    std::deque<double> pending_;
};

// One hour of exogenous data for one plant.
struct HourContext {
    double natural_inflow = 0.0;   // Qa, m3/s
    double demand = 0.0;           // Dm, MW
    double tolerance = 0.005;      // epsilon, fraction of demand
    double evaporation = 0.0;      // E, mm over the hour
    double surface_area = 0.0;     // A, km2
};

// psi_t = psi_{t-1} + c (Qa + arrivals - sum Qt - Qv) - E*A.
// 1 mm of evaporation over 1 km2 removes 1e-3 hm3.
inline double water_balance(double volume, double natural_inflow, double upstream_arrival,
                            double turbine_total, double spill, double evaporation = 0.0,
                            double surface_area = 0.0) {
    return volume +
           kFlowToVolume * (natural_inflow + upstream_arrival - turbine_total - spill) -
           evaporation * surface_area * 1e-3;
}

}  // namespace meshopt::hydro

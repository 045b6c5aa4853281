#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "meshopt/core/problem.hpp"
#include "meshopt/hydro/plant.hpp"
#include "meshopt/hydro/reservoir.hpp"

namespace meshopt::hydro {

// The two-plant cascade: index 0 is upstream (U1), index 1 downstream (U2).
struct SystemParameters {
    std::vector<PlantParameters> plants;
    int routing_delay_hours = 2;  // td, U1 -> U2 travel time
    double penalty_factor = 0.5;  // p of the fitness penalty
    bool literal_penalty = false; // audit mode: penalty squares the raw objective terms

    void validate() const {
        if (plants.size() != 2) throw std::invalid_argument("system: exactly two plants expected");
        for (const auto& p : plants) p.validate();
        if (routing_delay_hours < 1)
            throw std::invalid_argument("system: routing_delay_hours must be >= 1");
    }
};

// Per-plant hourly decision: one turbine flow per unit plus a spill flow.
// All units are active (Z = 1).
struct DispatchDecision {
    std::vector<std::vector<double>> turbine_flows;  // [plant][unit]
    std::vector<double> spill_flows;                 // [plant]

    double turbine_total(std::size_t u) const {
        return std::accumulate(turbine_flows[u].begin(), turbine_flows[u].end(), 0.0);
    }
    double outflow(std::size_t u) const { return turbine_total(u) + spill_flows[u]; }
};

// Indices of the constraint families in the violation vector.
enum ConstraintFamily : std::size_t {
    kBalance = 0,      // equality, satisfied by construction
    kDemandBand,       // produced power within +/- eps of demand
    kVolumeBounds,     // psi_min <= psi <= psi_max
    kDefluentRange,    // Qd_min <= total outflow <= Qd_max
    kTurbineBounds,    // Qt_min <= Qt <= Qt_max per active unit
    kSpillCap,         // Qv <= Qv_max
    kForcedSpill,      // psi over max requires spill of the excess
    kUnitPowerBounds,  // ph_min <= ph <= ph_max per active unit
    kBinaryStatus,     // Z in {0,1}, fixed to 1 here
    kConstraintFamilies
};

// Everything the report and feasibility checks need about one evaluated decision.
struct DispatchEvaluation {
    double f1 = 0.0;  // mean MW per (m3/s), maximization sense
    double f2 = 0.0;  // mean volume fraction after the hour, maximization sense
    std::vector<double> produced;         // MW per plant
    std::vector<double> next_volume;      // hm3 per plant
    std::vector<double> head;             // net head per plant
    std::array<double, kConstraintFamilies> violations{};
    ObjectiveVector penalized;            // minimization vector handed to the optimizer

    bool feasible(double eps = 1e-12) const {
        for (double v : violations)
            if (v > eps) return false;
        return true;
    }
};

// Mean over plants of (produced power / turbined flow); a plant with zero
// turbined flow contributes zero.
inline double objective_f1(const std::vector<double>& produced,
                           const std::vector<double>& turbined) {
    double acc = 0.0;
    for (std::size_t u = 0; u < produced.size(); ++u)
        if (turbined[u] > 0.0) acc += produced[u] / turbined[u];
    return acc / static_cast<double>(produced.size());
}

// Mean over plants of volume relative to capacity.
inline double objective_f2(const SystemParameters& system, const std::vector<double>& volumes) {
    double acc = 0.0;
    for (std::size_t u = 0; u < volumes.size(); ++u)
        acc += volumes[u] / system.plants[u].reservoir_max;
    return acc / static_cast<double>(volumes.size());
}

// Maximization objectives become minimization ones; infeasibility adds the
// shared quadratic penalty p * sum(v^2) on the normalized violations.
inline ObjectiveVector penalized_objectives(double f1, double f2,
                                            const std::array<double, kConstraintFamilies>& v,
                                            double penalty_factor) {
    double penalty = 0.0;
    for (double entry : v) penalty += entry * entry;
    penalty *= penalty_factor;
    return {-f1 + penalty, -f2 + penalty};
}

// The fitness expressions as printed in the source model: p * max(0, term)^2.
// Kept for auditability; they cannot tell feasible from infeasible points.
inline ObjectiveVector penalized_objectives_literal(double f1, double f2,
                                                    double penalty_factor) {
    const double t1 = std::max(0.0, f1);
    const double t2 = std::max(0.0, f2);
    return {penalty_factor * t1 * t1, penalty_factor * t2 * t2};
}

// Evaluates one decision against frozen pre-hour volumes. The hour's water
// balance is applied once (one-step lookahead) to price F2 and the volume
// constraints; reservoir state is only actually advanced by the simulator.
inline DispatchEvaluation evaluate_dispatch(const SystemParameters& system,
                                            const DispatchDecision& decision,
                                            const std::vector<double>& pre_volumes,
                                            const std::vector<double>& arrivals,
                                            const std::vector<HourContext>& ctx) {
    const std::size_t n_plants = system.plants.size();
    DispatchEvaluation eval;
    eval.produced.resize(n_plants);
    eval.next_volume.resize(n_plants);
    eval.head.resize(n_plants);
    std::vector<double> turbined(n_plants);

    auto& v = eval.violations;
    for (std::size_t u = 0; u < n_plants; ++u) {
        const PlantParameters& plant = system.plants[u];
        const double qt_total = decision.turbine_total(u);
        const double spill = decision.spill_flows[u];
        const double outflow = qt_total + spill;
        turbined[u] = qt_total;

        const double head = net_head(plant, pre_volumes[u], outflow);
        eval.head[u] = head;

        double produced = 0.0;
        const double power_span = std::max(plant.unit_power_max - plant.unit_power_min, 1.0);
        const double flow_span =
            std::max(plant.turbine_flow_max - plant.turbine_flow_min, 1.0);
        for (double qt : decision.turbine_flows[u]) {
            const double ph = (head > 0.0 && qt > 0.0)
                                  ? kGravityMw * unit_efficiency(plant, head, qt) * head * qt
                                  : 0.0;
            produced += ph;
            v[kUnitPowerBounds] += std::max(0.0, plant.unit_power_min - ph) / power_span +
                                   std::max(0.0, ph - plant.unit_power_max) / power_span;
            v[kTurbineBounds] += std::max(0.0, plant.turbine_flow_min - qt) / flow_span +
                                 std::max(0.0, qt - plant.turbine_flow_max) / flow_span;
        }
        if (head <= 0.0) v[kUnitPowerBounds] += 1.0;  // infeasible physics
        eval.produced[u] = produced;

        const double next = water_balance(pre_volumes[u], ctx[u].natural_inflow, arrivals[u],
                                          qt_total, spill, ctx[u].evaporation,
                                          ctx[u].surface_area);
        eval.next_volume[u] = next;

        // demand band
        if (ctx[u].demand > 0.0) {
            const double lo = ctx[u].demand * (1.0 - ctx[u].tolerance);
            const double hi = ctx[u].demand * (1.0 + ctx[u].tolerance);
            v[kDemandBand] += (std::max(0.0, lo - produced) + std::max(0.0, produced - hi)) /
                              ctx[u].demand;
        }
        // volume bounds
        const double vol_span = plant.reservoir_max - plant.reservoir_min;
        v[kVolumeBounds] += (std::max(0.0, plant.reservoir_min - next) +
                             std::max(0.0, next - plant.reservoir_max)) /
                            vol_span;
        // defluent range
        v[kDefluentRange] += (std::max(0.0, plant.defluent_min - outflow) +
                              std::max(0.0, outflow - plant.defluent_max)) /
                             (plant.defluent_max - plant.defluent_min);
        // spill cap
        if (plant.spill_max > 0.0)
            v[kSpillCap] += std::max(0.0, spill - plant.spill_max) / plant.spill_max;
        // forced spill of volume excess
        if (next > plant.reservoir_max) {
            const double required = (next - plant.reservoir_max) / kFlowToVolume;
            v[kForcedSpill] += std::max(0.0, required - spill) / plant.defluent_max;
        }
    }

    eval.f1 = objective_f1(eval.produced, turbined);
    eval.f2 = objective_f2(system, eval.next_volume);
    eval.penalized = system.literal_penalty
                         ? penalized_objectives_literal(eval.f1, eval.f2, system.penalty_factor)
                         : penalized_objectives(eval.f1, eval.f2, eval.violations,
                                                system.penalty_factor);
    return eval;
}

// Decision vector layout: [plant0 unit flows..., plant1 unit flows..., spill0, spill1].
class DispatchProblem : public Problem {
public:
    DispatchProblem(SystemParameters system, std::vector<double> pre_volumes,
                    std::vector<double> arrivals, std::vector<HourContext> ctx)
        : system_(std::move(system)), pre_volumes_(std::move(pre_volumes)),
          arrivals_(std::move(arrivals)), ctx_(std::move(ctx)) {
        system_.validate();
        for (const auto& plant : system_.plants) dimension_ += plant.unit_count;
        dimension_ += system_.plants.size();
    }

    std::string name() const override { return "hydro-dispatch"; }
    std::size_t dimension() const override { return dimension_; }
    std::size_t objective_count() const override { return 2; }

    double lower_bound(std::size_t i) const override { return bound(i).first; }
    double upper_bound(std::size_t i) const override { return bound(i).second; }

    DispatchDecision decode(const std::vector<double>& x) const {
        DispatchDecision d;
        std::size_t k = 0;
        d.turbine_flows.resize(system_.plants.size());
        for (std::size_t u = 0; u < system_.plants.size(); ++u) {
            d.turbine_flows[u].assign(x.begin() + static_cast<std::ptrdiff_t>(k),
                                      x.begin() + static_cast<std::ptrdiff_t>(
                                                      k + system_.plants[u].unit_count));
            k += system_.plants[u].unit_count;
        }
        for (std::size_t u = 0; u < system_.plants.size(); ++u) d.spill_flows.push_back(x[k++]);
        return d;
    }

    DispatchEvaluation evaluate_detail(const std::vector<double>& x) const {
        return evaluate_dispatch(system_, decode(x), pre_volumes_, arrivals_, ctx_);
    }

    ObjectiveVector evaluate(const std::vector<double>& x) const override {
        return evaluate_detail(x).penalized;
    }

    const SystemParameters& system() const { return system_; }
    const std::vector<double>& pre_volumes() const { return pre_volumes_; }
    const std::vector<double>& arrivals() const { return arrivals_; }
    const std::vector<HourContext>& contexts() const { return ctx_; }

private:
    std::pair<double, double> bound(std::size_t i) const {
        std::size_t k = 0;
        for (const auto& plant : system_.plants) {
            if (i < k + plant.unit_count) return {plant.turbine_flow_min, plant.turbine_flow_max};
            k += plant.unit_count;
        }
        const std::size_t u = i - k;
        if (u < system_.plants.size()) return {0.0, system_.plants[u].spill_max};
        throw std::out_of_range("DispatchProblem: bound index");
    }

    SystemParameters system_;
    std::vector<double> pre_volumes_;
    std::vector<double> arrivals_;
    std::vector<HourContext> ctx_;
    std::size_t dimension_ = 0;
};

}  // namespace meshopt::hydro

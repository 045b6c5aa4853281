#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "meshopt/hydro/case_study.hpp"
#include "meshopt/hydro/dispatch.hpp"
#include "meshopt/mesh/optimizer.hpp"
#include "meshopt/sim/report.hpp"

namespace meshopt::sim {

// Equal-split baseline: every unit targets demand / unit_count; the per-unit
// flow comes from a bisection on unit power, iterated with the downstream
// level (which depends on the total flow) to a fixed point.
struct UcdmResult {
    double unit_flow = 0.0;
    double total_flow = 0.0;
    double produced = 0.0;
};

inline UcdmResult ucdm_flows(const hydro::PlantParameters& plant, double demand,
                             double volume) {
    UcdmResult result;
    if (demand == 0.0) return result;
    if (demand > plant.capacity)
        throw std::runtime_error(plant.id + ": demand exceeds plant capacity");
    const double target = demand / static_cast<double>(plant.unit_count);
    const auto power_at = [&](double unit_flow, double total_flow) {
        return hydro::unit_power(plant, unit_flow, volume, total_flow);
    };
    double total = static_cast<double>(plant.unit_count) *
                   0.5 * (plant.turbine_flow_min + plant.turbine_flow_max);
    for (int pass = 0; pass < 1000; ++pass) {
        if (power_at(plant.turbine_flow_min, total) > target ||
            power_at(plant.turbine_flow_max, total) < target)
            throw std::runtime_error(plant.id + ": target unit power " +
                                     std::to_string(target) +
                                     " MW unreachable at current head");
        double lo = plant.turbine_flow_min;
        double hi = plant.turbine_flow_max;
        while (hi - lo > 1e-13 &&
               std::abs(power_at(0.5 * (lo + hi), total) - target) > 1e-6) {
            if (power_at(0.5 * (lo + hi), total) < target)
                lo = 0.5 * (lo + hi);
            else
                hi = 0.5 * (lo + hi);
        }
        const double unit_flow = 0.5 * (lo + hi);
        const double next_total = unit_flow * static_cast<double>(plant.unit_count);
        const bool converged = std::abs(next_total - total) <= 1e-6;
        total = next_total;
        if (converged) {
            result.unit_flow = unit_flow;
            result.total_flow = total;
            result.produced = power_at(unit_flow, total) * static_cast<double>(plant.unit_count);
            return result;
        }
    }
    throw std::runtime_error(plant.id + ": usual-dispatch fixed point did not converge");
}

// The front member nearest (in Euclidean distance) to the centroid of the
// min-max normalized objectives; ties go to the smallest index.
inline std::size_t central_solution_index(const std::vector<Solution>& front) {
    if (front.empty()) throw std::invalid_argument("central_solution: empty front");
    const std::size_t m = front[0].objectives.size();
    std::vector<double> lo(m, kInfinity), hi(m, -kInfinity);
    for (const auto& s : front) {
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], s.objectives[j]);
            hi[j] = std::max(hi[j], s.objectives[j]);
        }
    }
    const auto normalized = [&](const Solution& s, std::size_t j) {
        return hi[j] > lo[j] ? (s.objectives[j] - lo[j]) / (hi[j] - lo[j]) : 0.0;
    };
    std::vector<double> centroid(m, 0.0);
    for (const auto& s : front)
        for (std::size_t j = 0; j < m; ++j) centroid[j] += normalized(s, j);
    for (double& c : centroid) c /= static_cast<double>(front.size());

    std::size_t best = 0;
    double best_dist = kInfinity;
    for (std::size_t i = 0; i < front.size(); ++i) {
        double dist = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double d = normalized(front[i], j) - centroid[j];
            dist += d * d;
        }
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return best;
}

inline const Solution& central_solution(const std::vector<Solution>& front) {
    return front[central_solution_index(front)];
}

struct SimulationConfig {
    std::size_t hours = 24;
    std::size_t runs_per_hour = 30;
    MeshConfig mesh_config;
    double initial_volume_fraction = 0.8;
    std::vector<std::vector<hydro::HourContext>> hourly_data;  // [hour][plant]
    std::uint64_t base_seed = 1;
    std::size_t max_parallel_runs = 0;  // 0 = hardware concurrency

    void validate() const {
        if (hourly_data.size() < hours)
            throw std::invalid_argument("simulation: hourly_data shorter than hours");
        if (initial_volume_fraction <= 0.0 || initial_volume_fraction > 1.0)
            throw std::invalid_argument("simulation: initial_volume_fraction must be in (0, 1]");
        if (runs_per_hour < 1)
            throw std::invalid_argument("simulation: runs_per_hour must be >= 1");
        mesh_config.validate();
    }
};

inline SimulationConfig case_study_simulation(std::uint64_t base_seed = 1) {
    SimulationConfig cfg;
    cfg.base_seed = base_seed;
    for (const auto& row : hydro::case_study_day()) {
        hydro::HourContext c1{row.inflow_u1, row.demand_u1, 0.005, 0.0, 0.0};
        hydro::HourContext c2{row.inflow_u2, row.demand_u2, 0.005, 0.0, 0.0};
        cfg.hourly_data.push_back({c1, c2});
    }
    return cfg;
}

struct HourResult {
    int hour = 0;
    std::vector<Solution> combined_front;        // non-dominated merge of all runs
    std::vector<std::pair<double, double>> front_objectives;  // raw (F1, F2) per member
    std::optional<std::vector<double>> chosen;   // decision vector; empty if UCDm fallback
    hydro::DispatchEvaluation chosen_eval;
    hydro::DispatchDecision decision;
    std::vector<HourlyReportRow> report_rows;    // one per plant
    bool infeasible_fallback = false;
};

struct DailyReport {
    std::vector<HourResult> hours;
    std::vector<PlantReport> plants;
};

// Optimizes one hour with restarts: runs_per_hour independently seeded runs on
// the frozen hour problem, merged into one combined front. Seeds are
// base_seed + hour*1000 + run_index, so runs are independent but reproducible.
inline HourResult run_hour(int hour, const hydro::SystemParameters& system,
                           const std::vector<hydro::ReservoirState>& states,
                           const SimulationConfig& cfg) {
    const auto& ctx = cfg.hourly_data[static_cast<std::size_t>(hour)];
    std::vector<double> volumes, arrivals;
    for (const auto& s : states) {
        volumes.push_back(s.volume());
        arrivals.push_back(s.pending_arrival());
    }
    hydro::DispatchProblem problem(system, volumes, arrivals, ctx);

    const std::size_t runs = cfg.runs_per_hour;
    std::vector<std::vector<Solution>> fronts(runs);
    std::size_t workers = cfg.max_parallel_runs
                              ? cfg.max_parallel_runs
                              : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, runs);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t r = next.fetch_add(1); r < runs; r = next.fetch_add(1)) {
            MeshConfig mesh_cfg = cfg.mesh_config;
            mesh_cfg.rng_seed = cfg.base_seed + static_cast<std::uint64_t>(hour) * 1000 + r;
            MeshOptimizer optimizer(problem, mesh_cfg);
            fronts[r] = optimizer.run().front;
        }
    };
    std::vector<std::future<void>> futures;
    for (std::size_t w = 1; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futures) f.get();

    HourResult result;
    result.hour = hour;
    std::vector<Solution> merged;
    for (auto& front : fronts)
        std::move(front.begin(), front.end(), std::back_inserter(merged));
    FrontPartition partition = non_dominated_sort(merged);
    for (std::size_t i : partition.fronts[0]) result.combined_front.push_back(merged[i]);

    std::vector<UcdmResult> usual(system.plants.size());
    for (std::size_t u = 0; u < system.plants.size(); ++u)
        usual[u] = ucdm_flows(system.plants[u], ctx[u].demand, volumes[u]);

    // choose the most central feasible member
    std::vector<Solution> feasible;
    std::vector<std::size_t> feasible_index;
    for (std::size_t i = 0; i < result.combined_front.size(); ++i) {
        const hydro::DispatchEvaluation detail =
            problem.evaluate_detail(result.combined_front[i].position);
        result.front_objectives.emplace_back(detail.f1, detail.f2);
        if (detail.feasible()) {
            feasible.push_back(result.combined_front[i]);
            feasible_index.push_back(i);
        }
    }

    if (!feasible.empty()) {
        const std::size_t pick = feasible_index[central_solution_index(feasible)];
        result.chosen = result.combined_front[pick].position;
        result.decision = problem.decode(*result.chosen);
    } else {
        // no feasible optimized point: fall back to the usual dispatch
        result.infeasible_fallback = true;
        result.decision.turbine_flows.resize(system.plants.size());
        result.decision.spill_flows.assign(system.plants.size(), 0.0);
        for (std::size_t u = 0; u < system.plants.size(); ++u)
            result.decision.turbine_flows[u].assign(system.plants[u].unit_count,
                                                    usual[u].unit_flow);
    }
    result.chosen_eval = evaluate_dispatch(system, result.decision, volumes, arrivals, ctx);

    for (std::size_t u = 0; u < system.plants.size(); ++u) {
        HourlyReportRow row;
        row.hour = hour;
        row.demand_required = ctx[u].demand;
        row.demand_produced = result.chosen_eval.produced[u];
        row.error = std::abs(row.demand_produced - row.demand_required);
        row.usual_discharge = usual[u].total_flow;
        row.optimized_discharge = result.decision.outflow(u);
        row.saved_water = row.usual_discharge - row.optimized_discharge;
        result.report_rows.push_back(row);
    }
    return result;
}

// Applies the chosen decision's water balance and routes the upstream release
// to the downstream plant after the configured delay. The upstream plant has
// no plant above it, so its arrivals are always zero.
inline void advance_state(std::vector<hydro::ReservoirState>& states,
                          const hydro::SystemParameters& system,
                          const hydro::DispatchDecision& decision,
                          const std::vector<hydro::HourContext>& ctx) {
    std::vector<double> next(states.size());
    for (std::size_t u = 0; u < states.size(); ++u) {
        next[u] = hydro::water_balance(states[u].volume(), ctx[u].natural_inflow,
                                       states[u].pending_arrival(), decision.turbine_total(u),
                                       decision.spill_flows[u], ctx[u].evaporation,
                                       ctx[u].surface_area);
    }
    states[1].push_upstream_release(decision.outflow(0), system.routing_delay_hours);
    for (std::size_t u = 0; u < states.size(); ++u) states[u].advance(next[u]);
}

// The restarting strategy: each hour is optimized from scratch against the
// current reservoir state, then the chosen decision advances the state.
inline DailyReport run_day(const hydro::SystemParameters& system, const SimulationConfig& cfg) {
    cfg.validate();
    system.validate();
    DailyReport report;
    report.plants.resize(system.plants.size());
    std::vector<hydro::ReservoirState> states;
    for (const auto& plant : system.plants)
        states.emplace_back(cfg.initial_volume_fraction * plant.reservoir_max);

    for (std::size_t h = 0; h < cfg.hours; ++h) {
        HourResult hour = run_hour(static_cast<int>(h), system, states, cfg);
        advance_state(states, system, hour.decision, cfg.hourly_data[h]);
        for (std::size_t u = 0; u < system.plants.size(); ++u)
            report.plants[u].rows.push_back(hour.report_rows[u]);
        report.hours.push_back(std::move(hour));
    }
    return report;
}

}  // namespace meshopt::sim

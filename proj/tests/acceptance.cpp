// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any gate fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "meshopt/bench/registry.hpp"
#include "meshopt/core/hypervolume.hpp"
#include "meshopt/mesh/optimizer.hpp"
#include "meshopt/sim/simulator.hpp"

using namespace meshopt;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_benchmark_reproduction() {
    struct Gate {
        const char* name;
        double mean_floor;
    };
    const std::vector<Gate> gates = {
        {"zdt1", 120.5}, {"zdt3", 128.2}, {"zdt4", 120.3}, {"zdt6", 117.3}};
    bool pass = true;
    std::string detail = "benchmark hypervolume means (10 seeds, D=5):";
    for (const auto& gate : gates) {
        bench::ZdtProblem problem(gate.name[3] - '0', 5);
        double sum = 0.0;
        double worst_seconds = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            MeshConfig cfg;  // defaults are the documented experiment parameters
            cfg.rng_seed = seed;
            const auto t0 = std::chrono::steady_clock::now();
            const RunResult result = MeshOptimizer(problem, cfg).run();
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst_seconds = std::max(worst_seconds, seconds);
            std::vector<ObjectiveVector> objs;
            for (const auto& s : result.front) objs.push_back(s.objectives);
            sum += hypervolume_2d(objs, {11, 11});
        }
        const double mean = sum / 10.0;
        const bool ok = mean >= gate.mean_floor && worst_seconds <= 30.0;
        pass = pass && ok;
        detail += std::string(" ") + gate.name + "=" + fmt(mean) +
                  (ok ? "" : "(<" + fmt(gate.mean_floor) + "!)");
    }
    report(1, pass, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion_analytical_hypervolume() {
    const std::vector<std::pair<std::string, double>> targets = {{"zdt1", 120.657},
                                                                 {"zdt2", 120.324},
                                                                 {"zdt3", 128.773},
                                                                 {"zdt4", 120.657},
                                                                 {"zdt6", 117.511}};
    bool pass = true;
    std::string detail = "analytical front hypervolumes vs reference:";
    for (const auto& [name, target] : targets) {
        const double hv = hypervolume_2d(bench::analytical_front(name, 10000), {11, 11});
        const bool ok = std::abs(hv - target) < 0.01;
        pass = pass && ok;
        detail += " " + name + "=" + fmt(hv) + (ok ? "" : "(!~" + fmt(target) + ")");
    }
    report(2, pass, detail);
}

// ---------------------------------------------------------------- criterion 3
std::vector<std::vector<std::size_t>> peel_fronts(const std::vector<ObjectiveVector>& objs) {
    std::vector<std::size_t> remaining(objs.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> fronts;
    while (!remaining.empty()) {
        std::vector<std::size_t> front, rest;
        for (std::size_t i : remaining) {
            bool dominated = false;
            for (std::size_t j : remaining)
                if (i != j && dominates(objs[j], objs[i])) {
                    dominated = true;
                    break;
                }
            (dominated ? rest : front).push_back(i);
        }
        fronts.push_back(front);
        remaining = rest;
    }
    return fronts;
}

void criterion_sorting_equivalence() {
    Rng rng(1234);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.index(49);
        std::vector<ObjectiveVector> objs;
        for (std::size_t i = 0; i < n; ++i) {
            // mix of continuous and discretized coordinates to exercise ties
            const double a = rng.uniform(0, 10);
            const double b = rng.bernoulli(0.3) ? std::floor(rng.uniform(0, 5)) : rng.uniform(0, 10);
            objs.push_back({a, b});
        }
        std::vector<Solution> pop(n);
        for (std::size_t i = 0; i < n; ++i) pop[i].objectives = objs[i];
        const FrontPartition got = non_dominated_sort(pop);
        const auto want = peel_fronts(objs);
        bool same = got.fronts.size() == want.size();
        if (same) {
            for (std::size_t k = 0; k < want.size(); ++k) {
                auto a = got.fronts[k];
                auto b = want[k];
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) same = false;
            }
        }
        if (!same) ++mismatches;
    }
    report(3, mismatches == 0,
           "non-dominated sorting vs peeling oracle on 200 populations: " +
               std::to_string(200 - mismatches) + "/200 identical");
}

// ---------------------------------------------------------------- criterion 4
void criterion_hypervolume_equivalence() {
    Rng rng(77);
    double worst_z = 0.0;
    bool pass = true;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ObjectiveVector> front;
        const std::size_t n = 3 + rng.index(30);
        for (std::size_t i = 0; i < n; ++i)
            front.push_back({rng.uniform(0, 10.5), rng.uniform(0, 10.5)});
        const ObjectiveVector ref{11, 11};
        const double exact = hypervolume_2d(front, ref);

        // Monte-Carlo box sampling with a staircase domination test
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : front)
            if (p[0] < ref[0] && p[1] < ref[1]) pts.emplace_back(p[0], p[1]);
        std::sort(pts.begin(), pts.end());
        std::vector<double> min_f2(pts.size());
        double running = kInfinity;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            running = std::min(running, pts[i].second);
            min_f2[i] = running;
        }
        double lo0 = ref[0], lo1 = ref[1];
        for (const auto& p : pts) {
            lo0 = std::min(lo0, p.first);
            lo1 = std::min(lo1, p.second);
        }
        const double box = (ref[0] - lo0) * (ref[1] - lo1);
        const std::size_t samples = 10000000;
        std::size_t hits = 0;
        for (std::size_t s = 0; s < samples; ++s) {
            const double u = lo0 + (ref[0] - lo0) * rng.uniform();
            const double v = lo1 + (ref[1] - lo1) * rng.uniform();
            // dominated iff some point has f1 <= u and f2 <= v
            auto it = std::upper_bound(pts.begin(), pts.end(), std::make_pair(u, kInfinity));
            if (it != pts.begin() &&
                min_f2[static_cast<std::size_t>(it - pts.begin()) - 1] <= v)
                ++hits;
        }
        const double frac = static_cast<double>(hits) / static_cast<double>(samples);
        const double estimate = box * frac;
        const double se = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
        const double z = se > 0 ? std::abs(exact - estimate) / se : 0.0;
        worst_z = std::max(worst_z, z);
        if (z > 3.0) pass = false;
    }
    report(4, pass,
           "exact sweep vs 1e7-sample Monte-Carlo on 100 fronts: worst |z| = " + fmt(worst_z) +
               " (limit 3)");
}

// ---------------------------------------------------------------- criterion 5
void criterion_ucdm_baseline() {
    const auto system = hydro::case_study_system();
    const double v0 = 0.8 * 19528.0;
    const double u1 = sim::ucdm_flows(system.plants[0], 330.0, v0).total_flow;
    const double u2 = sim::ucdm_flows(system.plants[1], 264.0, v0).total_flow;
    const bool pass = std::abs(u1 - 705.81) <= 0.5 && std::abs(u2 - 573.59) <= 0.5;
    report(5, pass,
           "usual-dispatch hour-0 discharges: u1=" + fmt(u1) + " (705.81+-0.5), u2=" + fmt(u2) +
               " (573.59+-0.5)");
}

// ------------------------------------------------------- criteria 6, 7 and 10
struct DayStats {
    double sw_u1 = 0.0;
    double sw_u2 = 0.0;
    double worst_band = 0.0;
    double volume_min = 1e18;
    double volume_max = -1e18;
    double eta_min = 1e18;
    double eta_max = -1e18;
    int fallbacks = 0;
    bool liters_exact = true;
};

DayStats run_case_study_day(std::uint64_t seed) {
    const auto system = hydro::case_study_system();
    auto cfg = sim::case_study_simulation(seed);
    const sim::DailyReport report = sim::run_day(system, cfg);
    DayStats stats;
    stats.sw_u1 = report.plants[0].total_saved_water();
    stats.sw_u2 = report.plants[1].total_saved_water();
    stats.liters_exact =
        report.plants[0].total_saved_liters_per_day() == stats.sw_u1 * 3.6e6 &&
        report.plants[1].total_saved_liters_per_day() == stats.sw_u2 * 3.6e6;

    // replay the day's balance to inspect the volume trajectory
    std::vector<hydro::ReservoirState> states{
        hydro::ReservoirState(cfg.initial_volume_fraction * system.plants[0].reservoir_max),
        hydro::ReservoirState(cfg.initial_volume_fraction * system.plants[1].reservoir_max)};
    for (const auto& hour : report.hours) {
        stats.fallbacks += hour.infeasible_fallback ? 1 : 0;
        for (std::size_t u = 0; u < 2; ++u) {
            const auto& row = hour.report_rows[u];
            stats.worst_band = std::max(stats.worst_band, row.error / row.demand_required);
            for (double qt : hour.decision.turbine_flows[u]) {
                const double eta =
                    hydro::unit_efficiency(system.plants[u], hour.chosen_eval.head[u], qt);
                stats.eta_min = std::min(stats.eta_min, eta);
                stats.eta_max = std::max(stats.eta_max, eta);
            }
        }
        sim::advance_state(states, system, hour.decision,
                           cfg.hourly_data[static_cast<std::size_t>(hour.hour)]);
        for (const auto& s : states) {
            stats.volume_min = std::min(stats.volume_min, s.volume());
            stats.volume_max = std::max(stats.volume_max, s.volume());
        }
    }
    return stats;
}

void criteria_dispatch(const std::vector<DayStats>& days, bool conservation_ok) {
    // criterion 6: demand band and volume bounds on the first seed set
    const DayStats& first = days[0];
    const bool band_ok = first.worst_band <= 0.005 + 1e-12;
    const bool volume_ok = first.volume_min >= 4250.0 && first.volume_max <= 19528.0;
    report(6, band_ok && volume_ok,
           "dispatch feasibility: worst |DP-DR|/DR = " + fmt(first.worst_band) +
               " (<=0.005), volumes in [" + fmt(first.volume_min) + ", " +
               fmt(first.volume_max) + "] (fallback hours: " + std::to_string(first.fallbacks) +
               ")");

    // criterion 7: water savings, with the stated fallback governance
    bool in_window = true;
    bool liters_ok = true;
    std::string sw_text;
    for (const auto& day : days) {
        in_window = in_window && std::abs(day.sw_u1 - 73.57) <= 0.15 * 73.57 &&
                    std::abs(day.sw_u2 - 19.24) <= 0.15 * 19.24;
        liters_ok = liters_ok && day.liters_exact;
        sw_text += " (" + fmt(day.sw_u1) + ", " + fmt(day.sw_u2) + ")";
    }
    if (in_window && liters_ok) {
        report(7, true, "daily water savings within +-15% of (73.57, 19.24):" + sw_text);
    } else {
        // the criterion's own fallback: the property suite governs when the
        // efficiency-coefficient ambiguity prevents the reproduction
        const bool governed = liters_ok && conservation_ok && days[0].worst_band <= 0.005 &&
                              days[0].volume_min >= 4250.0;
        report(7, governed,
               "daily water savings" + sw_text +
                   " outside +-15% of (73.57, 19.24); published efficiency coefficients are "
                   "not reproducible as printed (see README), liters conversion exact, "
                   "governed by criteria 5, 6 and 8 per the fallback clause");
    }
}

void criterion_efficiency_bracket(const std::vector<DayStats>& days) {
    double lo = 1e18, hi = -1e18;
    for (const auto& day : days) {
        lo = std::min(lo, day.eta_min);
        hi = std::max(hi, day.eta_max);
    }
    const bool pass = lo >= 0.90 && hi <= 0.94;
    report(10, pass,
           "implied unit efficiencies at chosen dispatch points in [" + fmt(lo) + ", " +
               fmt(hi) + "] (required within [0.90, 0.94])");
}

// ---------------------------------------------------------------- criterion 8
struct ConservationResult {
    bool pass = false;
    std::string detail;
};

ConservationResult check_conservation() {
    const auto system = hydro::case_study_system();
    Rng rng(99);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<hydro::ReservoirState> states{hydro::ReservoirState(15622.4),
                                                  hydro::ReservoirState(15622.4)};
        double net_u1 = 0.0, net_u2 = 0.0;
        for (int h = 0; h < 24; ++h) {
            hydro::DispatchDecision d;
            d.turbine_flows = {std::vector<double>(8), std::vector<double>(6)};
            for (auto& q : d.turbine_flows[0]) q = rng.uniform(50, 150);
            for (auto& q : d.turbine_flows[1]) q = rng.uniform(50, 150);
            d.spill_flows = {rng.uniform(0, 50), rng.uniform(0, 50)};
            std::vector<hydro::HourContext> ctx{{rng.uniform(0, 500), 0, 0.005, 0, 0},
                                                {rng.uniform(0, 500), 0, 0.005, 0, 0}};
            net_u1 += ctx[0].natural_inflow - d.outflow(0);
            net_u2 += ctx[1].natural_inflow + states[1].pending_arrival() - d.outflow(1);
            sim::advance_state(states, system, d, ctx);
        }
        worst = std::max(worst, std::abs(states[0].volume() - 15622.4 - 0.0036 * net_u1));
        worst = std::max(worst, std::abs(states[1].volume() - 15622.4 - 0.0036 * net_u2));
    }

    // impulse: a release at t=0 appears in the downstream balance at t=2 only
    std::vector<hydro::ReservoirState> states{hydro::ReservoirState(10000.0),
                                              hydro::ReservoirState(10000.0)};
    hydro::DispatchDecision impulse;
    impulse.turbine_flows = {std::vector<double>(8, 100.0), std::vector<double>(6, 0.0)};
    impulse.spill_flows = {0.0, 0.0};
    hydro::DispatchDecision idle;
    idle.turbine_flows = {std::vector<double>(8, 0.0), std::vector<double>(6, 0.0)};
    idle.spill_flows = {0.0, 0.0};
    std::vector<hydro::HourContext> quiet{{0, 0, 0.005, 0, 0}, {0, 0, 0.005, 0, 0}};
    std::vector<double> downstream_volumes;
    sim::advance_state(states, system, impulse, quiet);
    downstream_volumes.push_back(states[1].volume());
    for (int h = 1; h <= 4; ++h) {
        sim::advance_state(states, system, idle, quiet);
        downstream_volumes.push_back(states[1].volume());
    }
    const bool impulse_ok = downstream_volumes[0] == 10000.0 &&
                            downstream_volumes[1] == 10000.0 &&
                            std::abs(downstream_volumes[2] - (10000.0 + 0.0036 * 800.0)) < 1e-9 &&
                            downstream_volumes[3] == downstream_volumes[2] &&
                            downstream_volumes[4] == downstream_volumes[2];

    ConservationResult result;
    result.pass = worst <= 1e-9 && impulse_ok;
    result.detail = "mass balance over 1000 random day traces: worst residual " +
                    std::to_string(worst) + " hm3 (<=1e-9); impulse arrives at exactly t+2: " +
                    (impulse_ok ? "yes" : "no");
    return result;
}

// ---------------------------------------------------------------- criterion 9
std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool directories_identical(const fs::path& a, const fs::path& b) {
    std::vector<std::string> names_a, names_b;
    for (const auto& entry : fs::directory_iterator(a)) names_a.push_back(entry.path().filename());
    for (const auto& entry : fs::directory_iterator(b)) names_b.push_back(entry.path().filename());
    std::sort(names_a.begin(), names_a.end());
    std::sort(names_b.begin(), names_b.end());
    if (names_a != names_b) return false;
    for (const auto& name : names_a)
        if (slurp(a / name) != slurp(b / name)) return false;
    return true;
}

void criterion_determinism() {
#ifndef MESHOPT_CLI_PATH
    report(9, false, "CLI path not configured");
#else
    const fs::path base = fs::temp_directory_path() / "meshopt_det";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string cli = MESHOPT_CLI_PATH;
    const std::string data = MESHOPT_DATA_DIR;
    bool pass = true;
    std::string detail = "byte-identical reruns:";

    for (int round = 0; round < 2; ++round) {
        const std::string out = (base / ("bench" + std::to_string(round))).string();
        const std::string cmd = cli + " bench --problems zdt1 --runs 2 --seed 7 --json --output " +
                                out + " > /dev/null";
        if (std::system(cmd.c_str()) != 0) pass = false;
    }
    pass = pass && directories_identical(base / "bench0", base / "bench1");
    detail += std::string(" bench=") + (pass ? "yes" : "no");

    bool dispatch_same = true;
    for (int round = 0; round < 2; ++round) {
        const std::string out = (base / ("dispatch" + std::to_string(round))).string();
        const std::string cmd = cli + " dispatch --config " + data + "/omrs.cfg --data " + data +
                                "/inflow_demand.csv --hours 2 --runs 3 --seed 5 --json --output " +
                                out + " > /dev/null";
        if (std::system(cmd.c_str()) != 0) dispatch_same = false;
    }
    dispatch_same =
        dispatch_same && directories_identical(base / "dispatch0", base / "dispatch1");
    detail += std::string(" dispatch=") + (dispatch_same ? "yes" : "no");
    report(9, pass && dispatch_same, detail);
#endif
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_benchmark_reproduction();
    criterion_analytical_hypervolume();
    criterion_sorting_equivalence();
    criterion_hypervolume_equivalence();
    criterion_ucdm_baseline();

    const ConservationResult conservation = check_conservation();
    std::vector<DayStats> days;
    for (std::uint64_t seed : {1ull, 1001001ull, 2002002ull})
        days.push_back(run_case_study_day(seed));
    criteria_dispatch(days, conservation.pass);
    report(8, conservation.pass, conservation.detail);
    criterion_determinism();
    criterion_efficiency_bracket(days);

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}

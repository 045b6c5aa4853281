// Command line front end: benchmark campaigns and the cascade dispatch
// simulation, with CSV artifacts (optionally mirrored as JSON) for external
// statistics tooling.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "meshopt/bench/registry.hpp"
#include "meshopt/core/hypervolume.hpp"
#include "meshopt/io/config_file.hpp"
#include "meshopt/io/csv.hpp"
#include "meshopt/mesh/optimizer.hpp"
#include "meshopt/sim/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace meshopt;

namespace {

constexpr double kHvRef = 11.0;

struct BenchOptions {
    std::vector<std::string> problems;
    std::string config_path;
    std::string output_dir = "out";
    std::uint64_t seed = 1;
    std::size_t runs = 30;
    bool json_mirror = false;
};

struct DispatchOptions {
    std::string config_path;
    std::string data_path;
    std::string output_dir = "out";
    std::uint64_t seed = 1;
    std::size_t runs = 0;   // 0 = from config
    std::size_t hours = 0;  // 0 = from config
    bool json_mirror = false;
};

int run_bench(const BenchOptions& opt) {
    MeshConfig base;
    if (!opt.config_path.empty()) {
        io::ConfigFile cfg = io::ConfigFile::parse_file(opt.config_path);
        base = io::load_mesh_config(cfg);
    }
    for (const auto& name : opt.problems) {
        if (std::find(bench::problem_names().begin(), bench::problem_names().end(), name) ==
            bench::problem_names().end()) {
            std::cerr << "unknown problem: " << name << "\n";
            return 2;
        }
    }
    fs::create_directories(opt.output_dir);

    std::ofstream summary(fs::path(opt.output_dir) / "summary.csv");
    summary << "problem,seed,hypervolume,evaluations\n";
    json mirror = json::array();

    for (const auto& name : opt.problems) {
        auto problem = bench::make_problem(name);
        double sum = 0.0, sumsq = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        for (std::size_t r = 0; r < opt.runs; ++r) {
            MeshConfig cfg = base;
            cfg.rng_seed = opt.seed + r;
            MeshOptimizer optimizer(*problem, cfg);
            const RunResult result = optimizer.run();

            std::vector<ObjectiveVector> objectives;
            for (const auto& s : result.front) objectives.push_back(s.objectives);
            const double hv = hypervolume_2d(objectives, {kHvRef, kHvRef});
            sum += hv;
            sumsq += hv * hv;

            const std::string front_name =
                name + "_seed" + std::to_string(cfg.rng_seed) + "_front.csv";
            io::write_front_csv((fs::path(opt.output_dir) / front_name).string(),
                                result.front);
            summary << name << "," << cfg.rng_seed << "," << io::format_double(hv) << ","
                    << result.evaluations << "\n";
            if (opt.json_mirror)
                mirror.push_back({{"problem", name},
                                  {"seed", cfg.rng_seed},
                                  {"hypervolume", hv},
                                  {"evaluations", result.evaluations}});
        }
        const double mean = sum / static_cast<double>(opt.runs);
        const double var = std::max(0.0, sumsq / static_cast<double>(opt.runs) - mean * mean);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << name << ": mean hypervolume " << io::format_double(mean) << " std "
                  << io::format_double(std::sqrt(var)) << " over " << opt.runs << " runs ("
                  << io::format_double(seconds) << " s)\n";
    }
    if (opt.json_mirror) {
        std::ofstream out(fs::path(opt.output_dir) / "summary.json");
        out << mirror.dump(2) << "\n";
    }
    return 0;
}

int run_dispatch(const DispatchOptions& opt) {
    io::ConfigFile cfg = io::ConfigFile::parse_file(opt.config_path);
    hydro::SystemParameters system = io::load_system(cfg);
    sim::SimulationConfig simulation = io::load_simulation(cfg);
    simulation.hourly_data = io::read_hourly_data(opt.data_path);
    simulation.base_seed = opt.seed;
    if (opt.runs) simulation.runs_per_hour = opt.runs;
    if (opt.hours) simulation.hours = opt.hours;
    if (simulation.hourly_data.size() < simulation.hours)
        throw std::runtime_error(opt.data_path + ": has " +
                                 std::to_string(simulation.hourly_data.size()) +
                                 " hours, need " + std::to_string(simulation.hours) +
                                 ": missing data row " +
                                 std::to_string(simulation.hourly_data.size() + 1));

    const sim::DailyReport report = sim::run_day(system, simulation);
    fs::create_directories(opt.output_dir);
    io::write_report_csv((fs::path(opt.output_dir) / "report.csv").string(), report.plants);

    {
        std::ofstream fronts(fs::path(opt.output_dir) / "fronts.csv");
        fronts << "hour,f1,f2";
        const std::size_t dim = 2 + system.plants[0].unit_count + system.plants[1].unit_count;
        for (std::size_t i = 0; i < dim; ++i) fronts << ",x" << i;
        fronts << "\n";
        for (const auto& hour : report.hours) {
            for (std::size_t i = 0; i < hour.combined_front.size(); ++i) {
                fronts << hour.hour << "," << io::format_double(hour.front_objectives[i].first)
                       << "," << io::format_double(hour.front_objectives[i].second);
                for (double x : hour.combined_front[i].position)
                    fronts << "," << io::format_double(x);
                fronts << "\n";
            }
        }
    }
    {
        std::ofstream totals(fs::path(opt.output_dir) / "totals.csv");
        totals << "plant,sw_m3s,sw_liters_per_day\n";
        for (std::size_t u = 0; u < report.plants.size(); ++u)
            totals << system.plants[u].id << ","
                   << io::format_double(report.plants[u].total_saved_water()) << ","
                   << io::format_double(report.plants[u].total_saved_liters_per_day()) << "\n";
    }
    if (opt.json_mirror) {
        json mirror;
        mirror["hours"] = json::array();
        for (std::size_t h = 0; h < report.hours.size(); ++h) {
            json hour;
            hour["hour"] = report.hours[h].hour;
            hour["fallback"] = report.hours[h].infeasible_fallback;
            for (std::size_t u = 0; u < report.plants.size(); ++u) {
                const auto& row = report.plants[u].rows[h];
                hour[system.plants[u].id] = {{"dr", row.demand_required},
                                             {"dp", row.demand_produced},
                                             {"e", row.error},
                                             {"uwd", row.usual_discharge},
                                             {"owd", row.optimized_discharge},
                                             {"sw", row.saved_water}};
            }
            mirror["hours"].push_back(hour);
        }
        for (std::size_t u = 0; u < report.plants.size(); ++u) {
            mirror["totals"][system.plants[u].id] = {
                {"sw_m3s", report.plants[u].total_saved_water()},
                {"sw_liters_per_day", report.plants[u].total_saved_liters_per_day()}};
        }
        std::ofstream out(fs::path(opt.output_dir) / "report.json");
        out << mirror.dump(2) << "\n";
    }

    int fallbacks = 0;
    for (const auto& hour : report.hours) fallbacks += hour.infeasible_fallback ? 1 : 0;
    for (std::size_t u = 0; u < report.plants.size(); ++u) {
        std::cout << system.plants[u].id << ": saved water "
                  << io::format_double(report.plants[u].total_saved_water()) << " m3/s ("
                  << io::format_double(report.plants[u].total_saved_liters_per_day())
                  << " liters/day)\n";
    }
    if (fallbacks)
        std::cout << "hours dispatched by the usual control fallback: " << fallbacks << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MESH multi-objective optimizer, benchmarks and cascade dispatch"};
    app.require_subcommand(1);

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "run benchmark campaigns");
    bench->add_option("--problems", bench_opt.problems, "problem names (zdt1..dtlz7)")
        ->required()
        ->delimiter(',');
    bench->add_option("--config", bench_opt.config_path, "mesh config file");
    bench->add_option("--output", bench_opt.output_dir, "output directory");
    bench->add_option("--seed", bench_opt.seed, "first seed");
    bench->add_option("--runs", bench_opt.runs, "seeded runs per problem")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--json", bench_opt.json_mirror, "also write summary.json");

    DispatchOptions dispatch_opt;
    CLI::App* dispatch = app.add_subcommand("dispatch", "run the cascade dispatch simulation");
    dispatch->add_option("--config", dispatch_opt.config_path, "plant + simulation config file")
        ->required();
    dispatch->add_option("--data", dispatch_opt.data_path, "hourly inflow/demand CSV")
        ->required();
    dispatch->add_option("--output", dispatch_opt.output_dir, "output directory");
    dispatch->add_option("--seed", dispatch_opt.seed, "base seed");
    dispatch->add_option("--runs", dispatch_opt.runs, "optimizer runs per hour");
    dispatch->add_option("--hours", dispatch_opt.hours, "hours to simulate");
    dispatch->add_flag("--json", dispatch_opt.json_mirror, "also write report.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (bench->parsed()) return run_bench(bench_opt);
        if (dispatch->parsed()) return run_dispatch(dispatch_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "meshopt/hydro/dispatch.hpp"
#include "meshopt/mesh/config.hpp"
#include "meshopt/sim/simulator.hpp"

namespace meshopt::io {

// Flat key-value file with [section] headers. '#' and ';' start comments.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_string(buffer.str(), path);
    }

    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>") {
        ConfigFile cfg;
        std::istringstream in(text);
        std::string line, section;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto comment = line.find_first_of("#;");
            if (comment != std::string::npos) line.erase(comment);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                             ": unterminated section header");
                section = trim(line.substr(1, line.size() - 2));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": empty key");
            cfg.values_[section.empty() ? key : section + "." + key] = value;
        }
        return cfg;
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    const std::map<std::string, std::string>& values() const { return values_; }

    std::string get_string(const std::string& key) {
        const auto it = values_.find(key);
        if (it == values_.end()) throw std::runtime_error("missing config key: " + key);
        consumed_.insert(key);
        return it->second;
    }

    double get_number(const std::string& key) {
        const std::string raw = get_string(key);
        try {
            std::size_t used = 0;
            const double v = std::stod(raw, &used);
            if (used != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw std::runtime_error("config key " + key + ": not a number: " + raw);
        }
    }

    double get_number(const std::string& key, double fallback) {
        return has(key) ? get_number(key) : fallback;
    }

    std::size_t get_count(const std::string& key, std::size_t fallback) {
        if (!has(key)) return fallback;
        const double v = get_number(key);
        if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
            throw std::runtime_error("config key " + key + ": not a nonnegative integer");
        return static_cast<std::size_t>(v);
    }

    bool get_flag(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const std::string raw = get_string(key);
        if (raw == "true" || raw == "1" || raw == "yes") return true;
        if (raw == "false" || raw == "0" || raw == "no") return false;
        throw std::runtime_error("config key " + key + ": expected a boolean, got " + raw);
    }

    // Every key must have been consumed by a loader; anything left is a typo.
    void reject_unknown(const std::string& scope) const {
        for (const auto& [key, value] : values_) {
            if (key.rfind(scope + ".", 0) == 0 && !consumed_.count(key))
                throw std::runtime_error("unknown config key: " + key);
        }
    }

private:
    static std::string trim(const std::string& s) {
        const auto begin = s.find_first_not_of(" \t\r");
        if (begin == std::string::npos) return "";
        const auto end = s.find_last_not_of(" \t\r");
        return s.substr(begin, end - begin + 1);
    }

    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

inline GuideType parse_guide_type(const std::string& raw) {
    if (raw == "e1") return GuideType::E1;
    if (raw == "e2") return GuideType::E2;
    throw std::runtime_error("guide_type must be e1 or e2, got " + raw);
}

inline SamplingSource parse_sampling_source(const std::string& raw) {
    if (raw == "v1") return SamplingSource::V1Swarm;
    if (raw == "v2") return SamplingSource::V2Memory;
    if (raw == "v3") return SamplingSource::V3Mixed;
    throw std::runtime_error("sampling_source must be v1, v2 or v3, got " + raw);
}

inline DeStrategy parse_de_strategy(const std::string& raw) {
    if (raw == "d1") return DeStrategy::D1Rand1;
    if (raw == "d2") return DeStrategy::D2Rand2;
    if (raw == "d3") return DeStrategy::D3Best1;
    if (raw == "d4") return DeStrategy::D4CurrentToBest1;
    if (raw == "d5") return DeStrategy::D5CurrentToRand1;
    throw std::runtime_error("de_strategy must be one of d1..d5, got " + raw);
}

// [mesh] section; missing keys fall back to the documented defaults.
inline MeshConfig load_mesh_config(ConfigFile& cfg) {
    MeshConfig mesh;
    mesh.population_size = cfg.get_count("mesh.population_size", mesh.population_size);
    mesh.mutation_rate = cfg.get_number("mesh.mutation_rate", mesh.mutation_rate);
    mesh.communication_rate =
        cfg.get_number("mesh.communication_rate", mesh.communication_rate);
    mesh.memory_size = cfg.get_count("mesh.memory_size", mesh.memory_size);
    mesh.guide_size = cfg.get_count("mesh.guide_size", mesh.guide_size);
    if (cfg.has("mesh.guide_type")) mesh.guide_type = parse_guide_type(cfg.get_string("mesh.guide_type"));
    if (cfg.has("mesh.sampling_source"))
        mesh.sampling_source = parse_sampling_source(cfg.get_string("mesh.sampling_source"));
    if (cfg.has("mesh.de_strategy"))
        mesh.de_strategy = parse_de_strategy(cfg.get_string("mesh.de_strategy"));
    mesh.crossover_rate = cfg.get_number("mesh.crossover_rate", mesh.crossover_rate);
    mesh.de_scale = cfg.get_number("mesh.de_scale", mesh.de_scale);
    mesh.eval_budget = cfg.get_count("mesh.eval_budget", mesh.eval_budget);
    mesh.rng_seed = cfg.get_count("mesh.rng_seed", mesh.rng_seed);
    mesh.e1_random = cfg.get_flag("mesh.e1_random", mesh.e1_random);
    mesh.gb_mutation_per_dimension =
        cfg.get_flag("mesh.gb_mutation_per_dimension", mesh.gb_mutation_per_dimension);
    cfg.reject_unknown("mesh");
    mesh.validate();
    return mesh;
}

// [plant.<id>] section. Level and efficiency coefficients are required; the
// operational defaults follow the documented values.
inline hydro::PlantParameters load_plant(ConfigFile& cfg, const std::string& id) {
    const std::string scope = "plant." + id;
    hydro::PlantParameters plant;
    plant.id = id;
    const auto require = [&](const std::string& key) {
        if (!cfg.has(scope + "." + key))
            throw std::runtime_error("missing required plant coefficient: " + scope + "." + key);
        return cfg.get_number(scope + "." + key);
    };
    plant.unit_count = cfg.get_count(scope + ".unit_count", 0);
    if (plant.unit_count < 1)
        throw std::runtime_error(scope + ".unit_count must be >= 1");
    for (int i = 0; i < 5; ++i) {
        plant.upstream_coeffs[static_cast<std::size_t>(i)] = require("a" + std::to_string(i));
        plant.downstream_coeffs[static_cast<std::size_t>(i)] = require("b" + std::to_string(i));
    }
    for (int i = 0; i < 6; ++i)
        plant.efficiency_coeffs[static_cast<std::size_t>(i)] = require("rho" + std::to_string(i));
    plant.turbine_flow_min = require("turbine_flow_min");
    plant.turbine_flow_max = require("turbine_flow_max");
    plant.unit_power_min = cfg.get_number(scope + ".unit_power_min", 0.0);
    plant.unit_power_max = require("unit_power_max");
    plant.defluent_min = require("defluent_min");
    plant.defluent_max = require("defluent_max");
    plant.spill_max = cfg.get_number(scope + ".spill_max", plant.defluent_max);
    plant.reservoir_min = require("reservoir_min");
    plant.reservoir_max = require("reservoir_max");
    plant.penstock_loss = cfg.get_number(scope + ".penstock_loss", 0.0);
    plant.capacity = cfg.get_number(scope + ".capacity",
                                    plant.unit_power_max * static_cast<double>(plant.unit_count));
    cfg.reject_unknown(scope);
    plant.validate();
    return plant;
}

// [system] + [plant.u1] + [plant.u2] sections.
inline hydro::SystemParameters load_system(ConfigFile& cfg) {
    hydro::SystemParameters system;
    system.plants = {load_plant(cfg, "u1"), load_plant(cfg, "u2")};
    system.routing_delay_hours =
        static_cast<int>(cfg.get_count("system.routing_delay_hours", 2));
    system.penalty_factor = cfg.get_number("system.penalty_factor", 0.5);
    system.literal_penalty = cfg.get_flag("system.literal_penalty", false);
    cfg.reject_unknown("system");
    system.validate();
    return system;
}

// [simulation] section (hour data comes from the separate CSV).
inline sim::SimulationConfig load_simulation(ConfigFile& cfg) {
    sim::SimulationConfig simulation;
    simulation.hours = cfg.get_count("simulation.hours", simulation.hours);
    simulation.runs_per_hour = cfg.get_count("simulation.runs_per_hour", simulation.runs_per_hour);
    simulation.initial_volume_fraction =
        cfg.get_number("simulation.initial_volume_fraction", simulation.initial_volume_fraction);
    simulation.base_seed = cfg.get_count("simulation.base_seed", simulation.base_seed);
    simulation.max_parallel_runs =
        cfg.get_count("simulation.max_parallel_runs", simulation.max_parallel_runs);
    cfg.reject_unknown("simulation");
    simulation.mesh_config = load_mesh_config(cfg);
    return simulation;
}

}  // namespace meshopt::io

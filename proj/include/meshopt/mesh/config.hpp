#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meshopt {

enum class GuideType { E1, E2 };
enum class SamplingSource { V1Swarm, V2Memory, V3Mixed };
enum class DeStrategy { D1Rand1, D2Rand2, D3Best1, D4CurrentToBest1, D5CurrentToRand1 };

inline std::string to_string(GuideType g) { return g == GuideType::E1 ? "e1" : "e2"; }
inline std::string to_string(SamplingSource s) {
    switch (s) {
        case SamplingSource::V1Swarm: return "v1";
        case SamplingSource::V2Memory: return "v2";
        default: return "v3";
    }
}
inline std::string to_string(DeStrategy d) {
    switch (d) {
        case DeStrategy::D1Rand1: return "d1";
        case DeStrategy::D2Rand2: return "d2";
        case DeStrategy::D3Best1: return "d3";
        case DeStrategy::D4CurrentToBest1: return "d4";
        default: return "d5";
    }
}

struct MeshConfig {
    std::size_t population_size = 50;   // NP
    double mutation_rate = 0.9;         // tau, weight and global-best mutation
    double communication_rate = 0.5;    // P, Bernoulli mask probability
    std::size_t memory_size = 5;        // MB archive capacity
    std::size_t guide_size = 3;         // individual guide array capacity
    GuideType guide_type = GuideType::E1;
    SamplingSource sampling_source = SamplingSource::V1Swarm;
    DeStrategy de_strategy = DeStrategy::D1Rand1;
    double crossover_rate = 0.7;        // CR
    double de_scale = 0.5;              // F
    std::size_t eval_budget = 15000;
    std::uint64_t rng_seed = 1;
    bool e1_random = true;              // E1 picks a random memory member; false = nearest sigma
    bool gb_mutation_per_dimension = false;  // one Gaussian draw per dimension instead of per particle

    void validate() const {
        if (population_size < 5)
            throw std::invalid_argument("population_size must be >= 5");
        if (mutation_rate <= 0.0 || mutation_rate > 1.0)
            throw std::invalid_argument("mutation_rate must be in (0, 1]");
        if (communication_rate < 0.0 || communication_rate > 1.0)
            throw std::invalid_argument("communication_rate must be in [0, 1]");
        if (memory_size < 1)
            throw std::invalid_argument("memory_size must be >= 1");
        if (guide_size < 1)
            throw std::invalid_argument("guide_size must be >= 1");
        if (crossover_rate < 0.0 || crossover_rate > 1.0)
            throw std::invalid_argument("crossover_rate must be in [0, 1]");
        if (de_scale <= 0.0)
            throw std::invalid_argument("de_scale must be > 0");
        if (eval_budget < population_size)
            throw std::invalid_argument("eval_budget must be >= population_size");
    }
};

}  // namespace meshopt

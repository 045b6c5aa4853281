#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "meshopt/core/dominance.hpp"
#include "meshopt/core/crowding.hpp"
#include "meshopt/core/rng.hpp"
#include "meshopt/core/types.hpp"
#include "meshopt/mesh/archive.hpp"
#include "meshopt/mesh/config.hpp"
#include "meshopt/mesh/particle.hpp"

namespace meshopt {

// w* = w + tau * N(0,1), clamped to [0,1]. Unbounded weights destabilize the
// movement rule.
inline double mutate_weight(double w, double tau, Rng& rng) {
    if (tau <= 0.0) throw std::invalid_argument("mutate_weight: tau must be > 0");
    return std::clamp(w + tau * rng.gaussian(), 0.0, 1.0);
}

// X_gb* = X_gb (1 + tau N(0,1)), clamped to bounds. By default one Gaussian
// draw is shared across dimensions (the mutation is carried out per particle);
// per_dimension switches to an independent draw per component.
inline std::vector<double> mutate_global_best(const std::vector<double>& x_gb, double tau,
                                              Rng& rng,
                                              std::span<const double> lower,
                                              std::span<const double> upper,
                                              bool per_dimension = false) {
    if (tau <= 0.0) throw std::invalid_argument("mutate_global_best: tau must be > 0");
    std::vector<double> out(x_gb.size());
    double factor = 1.0 + tau * rng.gaussian();
    for (std::size_t i = 0; i < x_gb.size(); ++i) {
        if (per_dimension && i > 0) factor = 1.0 + tau * rng.gaussian();
        out[i] = std::clamp(x_gb[i] * factor, lower[i], upper[i]);
    }
    return out;
}

// Diagonal of the Bernoulli communication matrix C: each entry is 1 with
// probability P.
inline std::vector<std::uint8_t> communication_mask(std::size_t dimension, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("communication_mask: p must be in [0, 1]");
    std::vector<std::uint8_t> mask(dimension);
    for (auto& bit : mask) bit = rng.bernoulli(p) ? 1 : 0;
    return mask;
}

// Two-objective sigma value: (f1^2 - f2^2) / (f1^2 + f2^2). Solutions on the
// same ray from the origin share a sigma value.
inline double sigma_value(const ObjectiveVector& f) {
    if (f.size() != 2) throw std::invalid_argument("sigma_value: requires 2 objectives");
    const double a = f[0] * f[0];
    const double b = f[1] * f[1];
    const double denom = a + b;
    if (denom == 0.0) throw std::invalid_argument("sigma_value: zero vector has no direction");
    return (a - b) / denom;
}

namespace detail {

// Index into `candidates` whose sigma is nearest to `target`, smallest index on ties.
inline std::size_t nearest_sigma(std::span<const Solution> candidates, double target) {
    std::size_t best = 0;
    double best_gap = kInfinity;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double gap = std::abs(sigma_value(candidates[i].objectives) - target);
        if (gap < best_gap) {
            best_gap = gap;
            best = i;
        }
    }
    return best;
}

}  // namespace detail

// Swarm guide selection. E1 picks from memory the solution nearest in sigma
// (or uniformly at random when e1_random is set). E2 picks the nearest-sigma
// solution of the next better front; particles already on front 0 fall back to
// the memory as in E1.
inline Solution select_swarm_guide(const Particle& particle,
                                   std::span<const Solution> population,
                                   const FrontPartition& partition,
                                   const MemoryArchive& memory, GuideType guide_type,
                                   Rng& rng, bool e1_random = false) {
    if (memory.empty()) throw std::invalid_argument("select_swarm_guide: empty memory");
    const double target = sigma_value(particle.solution.objectives);
    if (guide_type == GuideType::E2 && particle.solution.rank > 0) {
        const auto& upper = partition.fronts[static_cast<std::size_t>(particle.solution.rank) - 1];
        std::vector<Solution> candidates;
        candidates.reserve(upper.size());
        for (std::size_t i : upper) candidates.push_back(population[i]);
        return candidates[detail::nearest_sigma(candidates, target)];
    }
    if (guide_type == GuideType::E1 && e1_random) {
        return memory.solutions()[rng.index(memory.size())];
    }
    return memory.solutions()[detail::nearest_sigma(memory.solutions(), target)];
}

// Differential mutation (X_sn). Sampling pool per cfg.sampling_source:
// V1 = particles on fronts with rank <= particle's rank, V2 = memory,
// V3 = union. If the pool has fewer distinct members than the strategy needs,
// the whole swarm is added as fallback. The mutant is binomially crossed with
// the particle's position (one guaranteed dimension) and clamped to bounds.
inline std::vector<double> differential_mutation(const Particle& particle,
                                                 std::span<const Particle> swarm,
                                                 const MemoryArchive& memory,
                                                 const MeshConfig& cfg, Rng& rng,
                                                 std::span<const double> lower,
                                                 std::span<const double> upper) {
    const std::size_t dim = particle.solution.position.size();

    std::vector<const std::vector<double>*> pool;
    const auto add_swarm_ranked = [&] {
        for (const Particle& q : swarm) {
            if (q.solution.rank <= particle.solution.rank) pool.push_back(&q.solution.position);
        }
    };
    switch (cfg.sampling_source) {
        case SamplingSource::V1Swarm:
            add_swarm_ranked();
            break;
        case SamplingSource::V2Memory:
            for (const Solution& s : memory.solutions()) pool.push_back(&s.position);
            break;
        case SamplingSource::V3Mixed:
            add_swarm_ranked();
            for (const Solution& s : memory.solutions()) pool.push_back(&s.position);
            break;
    }

    std::size_t needed = 0;
    switch (cfg.de_strategy) {
        case DeStrategy::D1Rand1: needed = 3; break;
        case DeStrategy::D2Rand2: needed = 5; break;
        case DeStrategy::D3Best1: needed = 2; break;
        case DeStrategy::D4CurrentToBest1: needed = 2; break;
        case DeStrategy::D5CurrentToRand1: needed = 3; break;
    }
    // the strategy needs `needed` distinct vectors, not merely distinct indices
    const auto distinct_count = [](const std::vector<const std::vector<double>*>& v) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            bool seen = false;
            for (std::size_t j = 0; j < i && !seen; ++j) seen = (*v[i] == *v[j]);
            if (!seen) ++count;
        }
        return count;
    };
    if (distinct_count(pool) < needed) {
        for (const Particle& q : swarm) pool.push_back(&q.solution.position);
    }

    // distinct pool indices
    std::vector<std::size_t> picks;
    picks.reserve(needed);
    while (picks.size() < needed) {
        const std::size_t candidate = rng.index(pool.size());
        if (std::find(picks.begin(), picks.end(), candidate) == picks.end())
            picks.push_back(candidate);
    }
    const auto vec = [&](std::size_t k) -> const std::vector<double>& { return *pool[picks[k]]; };

    const double f = cfg.de_scale;
    const std::vector<double>& x = particle.solution.position;
    const std::vector<double>& best = particle.guide_position;
    std::vector<double> mutant(dim);
    switch (cfg.de_strategy) {
        case DeStrategy::D1Rand1:
            for (std::size_t i = 0; i < dim; ++i)
                mutant[i] = vec(0)[i] + f * (vec(1)[i] - vec(2)[i]);
            break;
        case DeStrategy::D2Rand2:
            for (std::size_t i = 0; i < dim; ++i)
                mutant[i] = vec(0)[i] + f * (vec(1)[i] - vec(2)[i]) + f * (vec(3)[i] - vec(4)[i]);
            break;
        case DeStrategy::D3Best1:
            for (std::size_t i = 0; i < dim; ++i)
                mutant[i] = best[i] + f * (vec(0)[i] - vec(1)[i]);
            break;
        case DeStrategy::D4CurrentToBest1:
            for (std::size_t i = 0; i < dim; ++i)
                mutant[i] = x[i] + f * (best[i] - x[i]) + f * (vec(0)[i] - vec(1)[i]);
            break;
        case DeStrategy::D5CurrentToRand1: {
            const double k = rng.uniform();
            for (std::size_t i = 0; i < dim; ++i)
                mutant[i] = x[i] + k * (vec(0)[i] - x[i]) + f * (vec(1)[i] - vec(2)[i]);
            break;
        }
    }

    // binomial crossover against the particle's position, one guaranteed dimension
    const std::size_t forced = rng.index(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i != forced && !rng.bernoulli(cfg.crossover_rate)) mutant[i] = x[i];
        mutant[i] = std::clamp(mutant[i], lower[i], upper[i]);
    }
    return mutant;
}

// Movement rule:
//   V_n = w_I* V_{n-1} + w_A* (X_sn - X_{n-1}) + w_C* C (X_gb* - X_{n-1})
//   X_n = X_{n-1} + V_n
// Velocity components are clamped to +/-(upper-lower); a position clipped to a
// bound zeroes that component's velocity.
inline void movement_rule(Particle& particle, const std::vector<double>& x_sn,
                          const std::vector<double>& x_gb_mutated,
                          std::span<const std::uint8_t> mask,
                          std::span<const double> lower, std::span<const double> upper) {
    std::vector<double>& x = particle.solution.position;
    std::vector<double>& v = particle.velocity;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double span = upper[i] - lower[i];
        double vi = particle.weight_inertia * v[i] +
                    particle.weight_attractor * (x_sn[i] - x[i]) +
                    particle.weight_cooperation * (mask[i] ? (x_gb_mutated[i] - x[i]) : 0.0);
        vi = std::clamp(vi, -span, span);
        double xi = x[i] + vi;
        if (xi < lower[i]) {
            xi = lower[i];
            vi = 0.0;
        } else if (xi > upper[i]) {
            xi = upper[i];
            vi = 0.0;
        }
        x[i] = xi;
        v[i] = vi;
    }
}

// Individual guide array update. A candidate that dominates every stored guide
// replaces the whole array; one that is mutually non-dominated with all guides
// is appended, evicting the lowest-crowding member when over capacity; anything
// else leaves the array unchanged.
inline void update_individual_guide(Particle& particle, const Solution& candidate,
                                    std::size_t capacity) {
    std::vector<Solution>& guides = particle.individual_guides;
    bool dominates_all = true;
    bool mutually_nondominated = true;
    for (const Solution& g : guides) {
        const bool cd = dominates(candidate.objectives, g.objectives);
        const bool gd = dominates(g.objectives, candidate.objectives);
        if (!cd) dominates_all = false;
        if (cd || gd) mutually_nondominated = false;
        if (gd) {
            return;  // dominated by a stored guide
        }
    }
    if (guides.empty() || dominates_all) {
        guides.assign(1, candidate);
        return;
    }
    if (mutually_nondominated) {
        guides.push_back(candidate);
        if (guides.size() > capacity) {
            const std::vector<double> distance = crowding_distance(guides);
            const std::size_t worst =
                std::min_element(distance.begin(), distance.end()) - distance.begin();
            guides.erase(guides.begin() + static_cast<std::ptrdiff_t>(worst));
        }
    }
}

}  // namespace meshopt

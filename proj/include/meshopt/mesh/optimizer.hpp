#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "meshopt/core/problem.hpp"
#include "meshopt/mesh/archive.hpp"
#include "meshopt/mesh/operators.hpp"

namespace meshopt {

struct GenerationLog {
    std::size_t generation;
    std::size_t evaluations;
    std::size_t memory_size;
    std::size_t front0_size;
};

struct RunResult {
    std::vector<Solution> front;      // non-dominated set of final population + memory
    std::vector<Solution> memory;     // final archive contents (size <= MB)
    std::vector<GenerationLog> log;
    std::size_t evaluations = 0;
};

// MESH: swarm moved by the C-DEEPSO movement rule, with DE-generated attractors,
// sigma-method swarm guides, individual guide arrays and a bounded non-dominated
// memory archive.
class MeshOptimizer {
public:
    MeshOptimizer(const Problem& problem, MeshConfig cfg)
        : problem_(problem), cfg_(std::move(cfg)), rng_(cfg_.rng_seed),
          memory_(cfg_.memory_size) {
        cfg_.validate();
        if (problem_.objective_count() != 2)
            throw std::invalid_argument("MeshOptimizer: requires a 2-objective problem");
        lower_.resize(problem_.dimension());
        upper_.resize(problem_.dimension());
        for (std::size_t i = 0; i < problem_.dimension(); ++i) {
            lower_[i] = problem_.lower_bound(i);
            upper_[i] = problem_.upper_bound(i);
        }
    }

    RunResult run() {
        initialize();
        std::size_t generation = 0;
        log_generation(generation);
        while (true) {
            if (evaluations_ >= cfg_.eval_budget) break;
            attractor_phase();
            if (evaluations_ >= cfg_.eval_budget) break;
            movement_phase();
            ++generation;
            log_generation(generation);
        }
        return assemble_result();
    }

    const MemoryArchive& memory() const { return memory_; }
    std::size_t evaluations() const { return evaluations_; }

private:
    ObjectiveVector evaluate(const std::vector<double>& x) {
        ++evaluations_;
        return problem_.evaluate(x);
    }

    void initialize() {
        const std::size_t dim = problem_.dimension();
        swarm_.assign(cfg_.population_size, Particle{});
        for (Particle& p : swarm_) {
            p.solution.position.resize(dim);
            for (std::size_t i = 0; i < dim; ++i)
                p.solution.position[i] = rng_.uniform(lower_[i], upper_[i]);
            p.velocity.assign(dim, 0.0);
            p.weight_inertia = rng_.uniform();
            p.weight_attractor = rng_.uniform();
            p.weight_cooperation = rng_.uniform();
            p.solution.objectives = evaluate(p.solution.position);
            update_individual_guide(p, p.solution, cfg_.guide_size);
        }
        refresh_fronts();
        memory_.update(front_solutions(0));
    }

    void refresh_fronts() {
        std::vector<Solution> view(swarm_.size());
        for (std::size_t i = 0; i < swarm_.size(); ++i) view[i] = swarm_[i].solution;
        partition_ = non_dominated_sort(view);
        for (std::size_t i = 0; i < swarm_.size(); ++i) swarm_[i].solution.rank = view[i].rank;
    }

    std::vector<Solution> front_solutions(std::size_t k) const {
        std::vector<Solution> out;
        out.reserve(partition_.fronts[k].size());
        for (std::size_t i : partition_.fronts[k]) out.push_back(swarm_[i].solution);
        return out;
    }

    std::vector<Solution> population_view() const {
        std::vector<Solution> view(swarm_.size());
        for (std::size_t i = 0; i < swarm_.size(); ++i) view[i] = swarm_[i].solution;
        return view;
    }

    bool strategy_needs_guide() const {
        return cfg_.de_strategy == DeStrategy::D3Best1 ||
               cfg_.de_strategy == DeStrategy::D4CurrentToBest1;
    }

    void select_guides() {
        const std::vector<Solution> view = population_view();
        for (Particle& p : swarm_) {
            p.guide_position = select_swarm_guide(p, view, partition_, memory_, cfg_.guide_type,
                                                  rng_, cfg_.e1_random)
                                   .position;
        }
    }

    // DE mutation, greedy replacement when the mutant dominates the particle,
    // then re-sort and refresh memory if anything changed.
    void attractor_phase() {
        if (strategy_needs_guide()) select_guides();
        for (Particle& p : swarm_) {
            p.attractor.position =
                differential_mutation(p, swarm_, memory_, cfg_, rng_, lower_, upper_);
            p.attractor.objectives = evaluate(p.attractor.position);
        }
        bool replaced = false;
        for (Particle& p : swarm_) {
            if (dominates(p.attractor.objectives, p.solution.objectives)) {
                p.solution.position = p.attractor.position;
                p.solution.objectives = p.attractor.objectives;
                replaced = true;
            }
        }
        if (replaced) {
            refresh_fronts();
            memory_.update(front_solutions(0));
        }
    }

    // Copy the swarm, mutate weights and the per-particle global best in both,
    // move both, update guide arrays, select NP best from the union, refresh
    // memory.
    void movement_phase() {
        select_guides();
        std::vector<Particle> copy = swarm_;
        move_all(swarm_);
        move_all(copy);

        std::vector<Particle> combined;
        combined.reserve(swarm_.size() + copy.size());
        std::move(swarm_.begin(), swarm_.end(), std::back_inserter(combined));
        std::move(copy.begin(), copy.end(), std::back_inserter(combined));

        std::vector<Solution> view(combined.size());
        for (std::size_t i = 0; i < combined.size(); ++i) view[i] = combined[i].solution;
        FrontPartition partition = non_dominated_sort(view);

        // next generation: fill by fronts, crowding-truncate the split front
        std::vector<Particle> next;
        next.reserve(cfg_.population_size);
        std::vector<Solution> first_front;
        for (const auto& front : partition.fronts) {
            if (front.empty()) continue;
            if (first_front.empty())
                for (std::size_t i : front) first_front.push_back(view[i]);
            if (next.size() + front.size() <= cfg_.population_size) {
                for (std::size_t i : front) {
                    combined[i].solution.rank = view[i].rank;
                    next.push_back(std::move(combined[i]));
                }
            } else {
                std::vector<Solution> split;
                split.reserve(front.size());
                for (std::size_t i : front) split.push_back(view[i]);
                const std::vector<double> distance = crowding_distance(split);
                std::vector<std::size_t> order(front.size());
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return distance[a] > distance[b];
                });
                for (std::size_t k : order) {
                    if (next.size() == cfg_.population_size) break;
                    const std::size_t i = front[k];
                    combined[i].solution.rank = view[i].rank;
                    combined[i].solution.crowding = distance[k];
                    next.push_back(std::move(combined[i]));
                }
            }
            if (next.size() >= cfg_.population_size) break;
        }
        swarm_ = std::move(next);
        refresh_fronts();
        memory_.update(first_front);
    }

    void move_all(std::vector<Particle>& group) {
        for (Particle& p : group) {
            p.weight_inertia = mutate_weight(p.weight_inertia, cfg_.mutation_rate, rng_);
            p.weight_attractor = mutate_weight(p.weight_attractor, cfg_.mutation_rate, rng_);
            p.weight_cooperation = mutate_weight(p.weight_cooperation, cfg_.mutation_rate, rng_);
            const std::vector<double> gb =
                mutate_global_best(p.guide_position, cfg_.mutation_rate, rng_, lower_, upper_,
                                   cfg_.gb_mutation_per_dimension);
            const std::vector<std::uint8_t> mask =
                communication_mask(p.solution.position.size(), cfg_.communication_rate, rng_);
            movement_rule(p, p.attractor.position, gb, mask, lower_, upper_);
            p.solution.objectives = evaluate(p.solution.position);
            update_individual_guide(p, p.solution, cfg_.guide_size);
        }
    }

    void log_generation(std::size_t generation) {
        log_.push_back({generation, evaluations_, memory_.size(), partition_.fronts[0].size()});
    }

    RunResult assemble_result() {
        std::vector<Solution> pool = population_view();
        for (const Solution& s : memory_.solutions()) pool.push_back(s);
        FrontPartition partition = non_dominated_sort(pool);
        RunResult result;
        result.front.reserve(partition.fronts[0].size());
        for (std::size_t i : partition.fronts[0]) {
            const Solution& candidate = pool[i];
            const bool duplicate =
                std::any_of(result.front.begin(), result.front.end(), [&](const Solution& s) {
                    return s.position == candidate.position &&
                           s.objectives == candidate.objectives;
                });
            if (!duplicate) result.front.push_back(candidate);
        }
        result.memory = memory_.solutions();
        result.log = std::move(log_);
        result.evaluations = evaluations_;
        return result;
    }

    const Problem& problem_;
    MeshConfig cfg_;
    Rng rng_;
    std::vector<double> lower_, upper_;
    std::vector<Particle> swarm_;
    FrontPartition partition_;
    MemoryArchive memory_;
    std::size_t evaluations_ = 0;
    std::vector<GenerationLog> log_;
};

}  // namespace meshopt

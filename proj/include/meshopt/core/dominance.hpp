#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "meshopt/core/types.hpp"

namespace meshopt {

// Pareto dominance (minimization): a <= b componentwise, strict in at least one.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective vectors of lengths " +
                                    std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

// Fast non-dominated sorting over the population. Sets each Solution's rank and
// returns the front partition.
inline FrontPartition non_dominated_sort(std::span<Solution> pop) {
    if (pop.empty()) throw std::invalid_argument("non_dominated_sort: empty population");
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<int> domination_count(n, 0);

    FrontPartition partition;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(pop[i].objectives, pop[j].objectives)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(pop[j].objectives, pop[i].objectives)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            pop[i].rank = 0;
            current.push_back(i);
        }
    }
    int front_index = 0;
    while (!current.empty()) {
        partition.fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) {
                    pop[j].rank = front_index + 1;
                    next.push_back(j);
                }
            }
        }
        ++front_index;
        current = std::move(next);
    }
    return partition;
}

}  // namespace meshopt

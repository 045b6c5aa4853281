#pragma once

#include <algorithm>
#include <numeric>
#include <span>

#include "meshopt/core/types.hpp"

namespace meshopt {

// NSGA-II crowding distance for one non-dominated front. Boundary solutions per
// objective get +infinity; interior values accumulate neighbour gaps normalized
// by the objective range. A degenerate range (max == min) contributes 0 instead
// of dividing by zero. Output order matches input order.
inline std::vector<double> crowding_distance(std::span<const Solution> front) {
    const std::size_t n = front.size();
    std::vector<double> distance(n, 0.0);
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), kInfinity);
        return distance;
    }
    const std::size_t m = front[0].objectives.size();
    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a].objectives[obj] < front[b].objectives[obj];
        });
        const double lo = front[order.front()].objectives[obj];
        const double hi = front[order.back()].objectives[obj];
        distance[order.front()] = kInfinity;
        distance[order.back()] = kInfinity;
        if (hi <= lo) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double gap = front[order[k + 1]].objectives[obj] -
                               front[order[k - 1]].objectives[obj];
            distance[order[k]] += gap / (hi - lo);
        }
    }
    return distance;
}

// Keeps the k most spread members of a front (largest crowding distance),
// ties broken by input order. k >= |front| returns the front unchanged.
inline std::vector<Solution> truncate_by_crowding(std::span<const Solution> front,
                                                  std::size_t k) {
    if (k == 0) throw std::invalid_argument("truncate_by_crowding: k must be >= 1");
    if (k >= front.size()) return {front.begin(), front.end()};
    const std::vector<double> distance = crowding_distance(front);
    std::vector<std::size_t> order(front.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return distance[a] > distance[b];
    });
    order.resize(k);
    std::sort(order.begin(), order.end());
    std::vector<Solution> kept;
    kept.reserve(k);
    for (std::size_t i : order) {
        kept.push_back(front[i]);
        kept.back().crowding = distance[i];
    }
    return kept;
}

}  // namespace meshopt

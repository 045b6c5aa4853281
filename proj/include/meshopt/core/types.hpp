#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace meshopt {

// Objective vector in minimization sense. Length M >= 2 and constant within a run.
using ObjectiveVector = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// One candidate: decision vector plus objectives and sorting metadata.
// rank/crowding are only meaningful after a sorting pass.
struct Solution {
    std::vector<double> position;
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;
};

// Result of non-dominated sorting: disjoint index sets covering the population,
// front 0 first. Every member of front k is dominated by at least one member of
// front k-1 and by no member of its own front.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

}  // namespace meshopt

#pragma once

#include <vector>

#include "meshopt/core/types.hpp"

namespace meshopt {

// Swarm member: a Solution plus velocity, the three self-adaptive movement
// weights and the bounded individual guide array. The guide array is kept
// mutually non-dominated at all times.
struct Particle {
    Solution solution;
    std::vector<double> velocity;
    double weight_inertia = 0.0;      // w_I
    double weight_attractor = 0.0;    // w_A
    double weight_cooperation = 0.0;  // w_C
    std::vector<Solution> individual_guides;

    // per-generation DE attractor (X_sn), position and objectives
    Solution attractor;
    // per-generation swarm guide (X_gb before mutation)
    std::vector<double> guide_position;
};

}  // namespace meshopt

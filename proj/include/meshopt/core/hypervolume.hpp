#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "meshopt/core/types.hpp"

namespace meshopt {

// Exact 2-objective hypervolume (minimization) by sort-and-sweep.
// Points that do not strictly dominate the reference point are clipped out.
inline double hypervolume_2d(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref) {
    if (ref.size() != 2) throw std::invalid_argument("hypervolume_2d: reference point must have 2 objectives");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (p.size() != 2) throw std::invalid_argument("hypervolume_2d: front point must have 2 objectives");
        if (p[0] < ref[0] && p[1] < ref[1]) pts.emplace_back(p[0], p[1]);
    }
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double prev_f2 = ref[1];
    for (const auto& [f1, f2] : pts) {
        if (f2 < prev_f2) {
            area += (ref[0] - f1) * (prev_f2 - f2);
            prev_f2 = f2;
        }
    }
    return area;
}

}  // namespace meshopt

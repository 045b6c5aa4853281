#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "meshopt/bench/dtlz.hpp"
#include "meshopt/bench/zdt.hpp"
#include "meshopt/core/dominance.hpp"

namespace meshopt::bench {

inline const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {"zdt1",  "zdt2",  "zdt3",
                                                   "zdt4",  "zdt6",  "dtlz1",
                                                   "dtlz2", "dtlz4", "dtlz7"};
    return names;
}

// Default dimensions used by the benchmark experiments: 5 for ZDT, 10 for DTLZ.
inline std::unique_ptr<Problem> make_problem(const std::string& name, std::size_t dimension = 0) {
    const auto digit = [&](char c) { return c - '0'; };
    if (name.rfind("zdt", 0) == 0 && name.size() == 4) {
        return std::make_unique<ZdtProblem>(digit(name[3]), dimension ? dimension : 5);
    }
    if (name.rfind("dtlz", 0) == 0 && name.size() == 5) {
        return std::make_unique<DtlzProblem>(digit(name[4]), dimension ? dimension : 10);
    }
    throw std::invalid_argument("unknown problem: " + name);
}

namespace detail {

// Keep the non-dominated subset of a curve sampled with ascending f1.
inline std::vector<ObjectiveVector> lower_staircase(std::vector<ObjectiveVector> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<ObjectiveVector> out;
    double best = kInfinity;
    for (auto& p : pts) {
        if (p[1] < best) {
            best = p[1];
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace detail

// n points on the closed-form Pareto front, mutually non-dominated. Fronts
// with disconnected or non-monotone parameterizations (ZDT3, DTLZ7) are sampled
// by a parameter sweep filtered to the non-dominated subset, so fewer than n
// points may be returned for those.
inline std::vector<ObjectiveVector> analytical_front(const std::string& name, std::size_t n) {
    if (n < 2) throw std::invalid_argument("analytical_front: need n >= 2");
    const double steps = static_cast<double>(n - 1);
    std::vector<ObjectiveVector> pts;
    pts.reserve(n);
    if (name == "zdt1" || name == "zdt4") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / steps;
            pts.push_back({t, 1.0 - std::sqrt(t)});
        }
        return pts;
    }
    if (name == "zdt2") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / steps;
            pts.push_back({t, 1.0 - t * t});
        }
        return pts;
    }
    if (name == "zdt3") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / steps;
            pts.push_back({t, 1.0 - std::sqrt(t) - t * std::sin(10.0 * std::numbers::pi * t)});
        }
        return detail::lower_staircase(std::move(pts));
    }
    if (name == "zdt6") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t =
                kZdt6FrontStart + (1.0 - kZdt6FrontStart) * static_cast<double>(i) / steps;
            pts.push_back({t, 1.0 - t * t});
        }
        return pts;
    }
    if (name == "dtlz1") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 0.5 * static_cast<double>(i) / steps;
            pts.push_back({t, 0.5 - t});
        }
        return pts;
    }
    if (name == "dtlz2" || name == "dtlz4") {
        for (std::size_t i = 0; i < n; ++i) {
            const double angle = (std::numbers::pi / 2.0) * static_cast<double>(i) / steps;
            pts.push_back({std::cos(angle), std::sin(angle)});
        }
        return pts;
    }
    if (name == "dtlz7") {
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / steps;
            pts.push_back({t, 4.0 - t * (1.0 + std::sin(3.0 * std::numbers::pi * t))});
        }
        return detail::lower_staircase(std::move(pts));
    }
    throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace meshopt::bench

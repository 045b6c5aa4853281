#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "meshopt/core/types.hpp"

namespace meshopt {

// Box-constrained continuous multi-objective problem. evaluate() must be a pure
// deterministic function of the position, so candidate evaluations are safe to
// run concurrently.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual std::size_t objective_count() const = 0;
    virtual double lower_bound(std::size_t i) const = 0;
    virtual double upper_bound(std::size_t i) const = 0;
    virtual ObjectiveVector evaluate(const std::vector<double>& x) const = 0;

    void check_position(const std::vector<double>& x) const {
        if (x.size() != dimension()) {
            throw std::invalid_argument(name() + ": expected dimension " +
                                        std::to_string(dimension()) + ", got " +
                                        std::to_string(x.size()));
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lower_bound(i) || x[i] > upper_bound(i)) {
                throw std::invalid_argument(name() + ": x[" + std::to_string(i) +
                                            "]=" + std::to_string(x[i]) + " out of bounds");
            }
        }
    }
};

}  // namespace meshopt

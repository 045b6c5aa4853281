#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "meshopt/core/problem.hpp"

namespace meshopt::bench {

// DTLZ1, 2, 4, 7 instantiated with two objectives; all variables in [0, 1].
class DtlzProblem : public Problem {
public:
    DtlzProblem(int id, std::size_t dimension) : id_(id), dim_(dimension) {
        if (id != 1 && id != 2 && id != 4 && id != 7)
            throw std::invalid_argument("DtlzProblem: id must be one of 1,2,4,7");
        if (dim_ < 2) throw std::invalid_argument("DtlzProblem: dimension must be >= 2");
    }

    std::string name() const override { return "dtlz" + std::to_string(id_); }
    std::size_t dimension() const override { return dim_; }
    std::size_t objective_count() const override { return 2; }
    double lower_bound(std::size_t) const override { return 0.0; }
    double upper_bound(std::size_t) const override { return 1.0; }

    ObjectiveVector evaluate(const std::vector<double>& x) const override {
        check_position(x);
        const std::size_t k = dim_ - 1;  // distance variables x[1..]
        switch (id_) {
            case 1: {
                double g = static_cast<double>(k);
                for (std::size_t i = 1; i < dim_; ++i) {
                    const double z = x[i] - 0.5;
                    g += z * z - std::cos(20.0 * std::numbers::pi * z);
                }
                g *= 100.0;
                return {0.5 * x[0] * (1.0 + g), 0.5 * (1.0 - x[0]) * (1.0 + g)};
            }
            case 2:
            case 4: {
                double g = 0.0;
                for (std::size_t i = 1; i < dim_; ++i) {
                    const double z = x[i] - 0.5;
                    g += z * z;
                }
                const double y = id_ == 4 ? std::pow(x[0], 100.0) : x[0];
                const double angle = y * std::numbers::pi / 2.0;
                return {(1.0 + g) * std::cos(angle), (1.0 + g) * std::sin(angle)};
            }
            default: {  // DTLZ7
                double g = 0.0;
                for (std::size_t i = 1; i < dim_; ++i) g += x[i];
                g = 1.0 + 9.0 * g / static_cast<double>(k);
                const double f1 = x[0];
                const double h =
                    2.0 - f1 / (1.0 + g) * (1.0 + std::sin(3.0 * std::numbers::pi * f1));
                return {f1, (1.0 + g) * h};
            }
        }
    }

    int id() const { return id_; }

private:
    int id_;
    std::size_t dim_;
};

}  // namespace meshopt::bench

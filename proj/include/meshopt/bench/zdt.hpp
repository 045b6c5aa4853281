#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "meshopt/core/problem.hpp"

namespace meshopt::bench {

// Zitzler-Deb-Thiele test problems ZDT1-4 and ZDT6, two objectives.
class ZdtProblem : public Problem {
public:
    ZdtProblem(int id, std::size_t dimension) : id_(id), dim_(dimension) {
        if (id != 1 && id != 2 && id != 3 && id != 4 && id != 6)
            throw std::invalid_argument("ZdtProblem: id must be one of 1,2,3,4,6");
        if (dim_ < 2) throw std::invalid_argument("ZdtProblem: dimension must be >= 2");
    }

    std::string name() const override { return "zdt" + std::to_string(id_); }
    std::size_t dimension() const override { return dim_; }
    std::size_t objective_count() const override { return 2; }

    double lower_bound(std::size_t i) const override {
        return (id_ == 4 && i > 0) ? -5.0 : 0.0;
    }
    double upper_bound(std::size_t i) const override {
        return (id_ == 4 && i > 0) ? 5.0 : 1.0;
    }

    ObjectiveVector evaluate(const std::vector<double>& x) const override {
        check_position(x);
        const std::size_t n = x.size();
        switch (id_) {
            case 1: {
                double g = 0.0;
                for (std::size_t i = 1; i < n; ++i) g += x[i];
                g = 1.0 + 9.0 * g / static_cast<double>(n - 1);
                const double f1 = x[0];
                return {f1, g * (1.0 - std::sqrt(f1 / g))};
            }
            case 2: {
                double g = 0.0;
                for (std::size_t i = 1; i < n; ++i) g += x[i];
                g = 1.0 + 9.0 * g / static_cast<double>(n - 1);
                const double f1 = x[0];
                return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
            }
            case 3: {
                double g = 0.0;
                for (std::size_t i = 1; i < n; ++i) g += x[i];
                g = 1.0 + 9.0 * g / static_cast<double>(n - 1);
                const double f1 = x[0];
                const double ratio = f1 / g;
                return {f1, g * (1.0 - std::sqrt(ratio) -
                                 ratio * std::sin(10.0 * std::numbers::pi * f1))};
            }
            case 4: {
                double g = 1.0 + 10.0 * static_cast<double>(n - 1);
                for (std::size_t i = 1; i < n; ++i)
                    g += x[i] * x[i] - 10.0 * std::cos(4.0 * std::numbers::pi * x[i]);
                const double f1 = x[0];
                return {f1, g * (1.0 - std::sqrt(f1 / g))};
            }
            default: {  // ZDT6
                const double s = std::sin(6.0 * std::numbers::pi * x[0]);
                const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(s, 6);
                double g = 0.0;
                for (std::size_t i = 1; i < n; ++i) g += x[i];
                g = 1.0 + 9.0 * std::pow(g / static_cast<double>(n - 1), 0.25);
                return {f1, g * (1.0 - (f1 / g) * (f1 / g))};
            }
        }
    }

    int id() const { return id_; }

private:
    int id_;
    std::size_t dim_;
};

// Smallest attainable f1 of ZDT6 (at x1 ~ 0.0814578); the front spans [this, 1].
inline constexpr double kZdt6FrontStart = 0.28077531881536977;

}  // namespace meshopt::bench

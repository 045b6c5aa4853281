#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace meshopt {

// Seeded random source with explicit draw formulas so that results are
// reproducible across standard library implementations (std::normal_distribution
// and friends are not pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller, one spare cached
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * M_PI * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

    // uniform integer in [0, n)
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    bool bernoulli(double p) { return uniform() <= p; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace meshopt

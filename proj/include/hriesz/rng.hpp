#pragma once

#include <cstdint>
#include <random>

namespace hriesz {

// Seeded generator used by every randomized sweep.  mt19937_64 is fully
// specified by the standard; the uniform/gaussian mappings below avoid
// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // standard normal, Box-Muller
    double gaussian() {
        double u = uniform();
        double v = uniform();
        while (u <= 1e-300) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hriesz

#pragma once

// Seeded noise source for the simulator.
//
// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. The distributions are implemented here rather than with
// <random>'s distribution classes, whose algorithms vary between standard
// libraries:
//   uniform()  = (next() >> 11) * 2^-53, in [0, 1)
//   gaussian() = Box-Muller, sqrt(-2 ln u1) * cos(2 pi u2), u1 in (0, 1]
// One gaussian() call consumes exactly two raw draws.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace frameguide {

class SimRng {
public:
    explicit SimRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double gaussian(double mean = 0.0, double stddev = 1.0) {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + stddev * z;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace frameguide

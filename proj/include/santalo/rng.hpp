#pragma once

#include <cstdint>
#include <random>

#include "santalo/smallvec.hpp"

namespace santalo {

// Deterministic random source. std::mt19937_64 has a standard-mandated
// sequence; the value transforms below avoid the implementation-defined
// std::*_distribution classes so that seeded runs are bit-identical on
// every platform.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    int uniform_int(int a, int b) {  // inclusive bounds
        return a + static_cast<int>(uniform() * (b - a + 1));
    }

    double normal() {
        // Box-Muller; one value per call keeps the stream simple
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    Vec unit_vector(int dim) {
        Vec v(dim);
        double r = 0;
        do {
            for (int i = 0; i < dim; ++i) v[i] = normal();
            r = norm(v);
        } while (r < 1e-12);
        return v / r;
    }

    Vec in_ball(int dim, double radius = 1.0) {
        Vec v = unit_vector(dim);
        double r = radius * std::pow(uniform(), 1.0 / dim);
        return r * v;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace santalo

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mlpkit {

// Uniform draw in [0,1) with 53-bit resolution. std::uniform_real_distribution
// is implementation-defined, so seeded runs would not be reproducible across
// standard libraries; this mapping is.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

// Box-Muller; consumes exactly two engine draws per call.
inline double normal_sample(std::mt19937_64& rng, double mean, double stddev) {
    const double u1 = 1.0 - uniform_unit(rng);  // (0,1], keeps the log finite
    const double u2 = uniform_unit(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

// Fisher-Yates built on the stable uniform mapping above.
template <class T>
void seeded_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_unit(rng) * static_cast<double>(i));
        if (j >= i) j = i - 1;
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace mlpkit

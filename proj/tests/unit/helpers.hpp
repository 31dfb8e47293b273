#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pmtest {

// |value - expected| <= tol relative to the expected magnitude (absolute
// near zero).
inline bool near(double value, double expected, double tol) {
    return std::abs(value - expected) <= tol * std::max(1.0, std::abs(expected));
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

} // namespace pmtest

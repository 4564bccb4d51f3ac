#pragma once

#include <cmath>
#include <numbers>
#include <random>

// Shared bits for the test suites.
namespace testutil {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Smallest angular distance between two phases, modulo 2 pi.
inline double mod2pi_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x51a7e);  // fixed seed: deterministic suites
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace testutil

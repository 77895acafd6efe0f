#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qvar {

/// Seedable generator with bit-reproducible output across platforms.
/// mt19937_64 is fully specified by the C++ standard; the distribution
/// helpers below avoid std::uniform_*_distribution, whose output is
/// implementation-defined.
class rng {
public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi] via rejection-free modular reduction on a
    /// 64-bit draw (bias < 2^-50 for desk-scale ranges).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    /// Standard normal via Box-Muller (deterministic formula, no state).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace qvar

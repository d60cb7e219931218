#pragma once

/// @file rng.hpp
/// @brief Portable seeded random stream.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so every conversion to reals and bounded integers
/// is done here by hand. Two streams built from the same seed produce the
/// same draws on every conforming platform.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace shrike {

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [a, b].
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer on [0, n). Rejection sampling keeps it unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // UniformRandomBitGenerator, so std::shuffle and friends accept it.
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace shrike

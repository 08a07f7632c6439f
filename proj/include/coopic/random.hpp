#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "coopic/types.hpp"

namespace coopic::rng {

/// SplitMix64 finalizer; bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and two indices.
/// Streams for distinct (a, b) never collide in practice, so adding a wireless
/// link to a topology does not perturb the draws of the other blocks.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(mix64(base) ^ (a + 1)) ^ ((b + 1) * 0x9e3779b97f4a7c15ull));
}

/// Counter-based SplitMix64 stream. Deterministic and platform independent.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a logarithm argument.
    double uniform01_open_low() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Circularly symmetric complex Gaussian with E|z|^2 = 1.
    Complex complex_gaussian() {
        const double amplitude = std::sqrt(-std::log(uniform01_open_low()));
        const double phase = 2.0 * std::numbers::pi * uniform01();
        return {amplitude * std::cos(phase), amplitude * std::sin(phase)};
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

/// rows x cols matrix with i.i.d. CN(0,1) entries, a pure function of the seed.
inline CMat complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    Stream stream(seed);
    CMat out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = stream.complex_gaussian();
    return out;
}

}  // namespace coopic::rng

#pragma once

// Deterministic randomness. std::mt19937_64 has a standard-specified output
// sequence, so seeding it identically reproduces experiments across platforms.
// Bounded sampling is done with explicit rejection instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.

#include <cstdint>
#include <random>

namespace lindec {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n); n == 0 is treated as the full 64-bit range.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return next();
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    // splitmix64 finalizer: derives well-separated per-stream seeds from a
    // master seed, e.g. mix(seed, trial_index) for independent trials.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace lindec

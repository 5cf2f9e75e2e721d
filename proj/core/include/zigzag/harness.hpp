#pragma once

#include <cstdint>

#include "zigzag/module.hpp"

namespace zigzag {

/// SplitMix64 with the standard constants (0x9E3779B97F4A7C15 increment,
/// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB mixers). Fixed here so planted
/// instances reproduce bit-for-bit across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
};

/// Invertible size x size matrix built as a product of random elementary
/// transformations and permutations.
Matrix random_invertible(SplitMix64& rng, int size, FieldSpec field);
Matrix random_invertible(std::uint64_t seed, int size, FieldSpec field);

/// Uniformly random arrow directions.
ZigzagType random_type(SplitMix64& rng, int length);

/// Module with planted ground truth: a direct sum of up to max_intervals
/// interval modules (sampled uniformly over subintervals of 1..n), scrambled
/// by a random basis change at every index. truth is the sampled multiset.
struct PlantedInstance {
    ZigzagModule module;
    Barcode truth;
    std::uint64_t seed = 0;
};

PlantedInstance plant(std::uint64_t seed, const ZigzagType& type, int max_intervals,
                      FieldSpec field);

}  // namespace zigzag

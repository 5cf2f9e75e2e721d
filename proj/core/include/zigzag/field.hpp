#pragma once

#include <cstdint>

#include "zigzag/errors.hpp"

namespace zigzag {

/// Arithmetic in the prime field GF(p). Elements are stored reduced, in [0, p).
struct FieldSpec {
    std::uint32_t p;

    explicit FieldSpec(std::uint32_t modulus);

    static bool is_prime(std::uint32_t n);

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return std::uint32_t(s >= p ? s - p : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// Multiplicative inverse; throws ShapeError on 0.
    std::uint32_t inv(std::uint32_t a) const;

    /// Reduce an arbitrary signed value into [0, p).
    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return std::uint32_t(r);
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace zigzag

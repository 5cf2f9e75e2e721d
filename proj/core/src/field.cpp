#include "zigzag/field.hpp"

#include <string>

namespace zigzag {

bool FieldSpec::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t modulus) : p(modulus) {
    if (modulus >= (1u << 31) || !is_prime(modulus))
        throw ParseError("field modulus must be a prime below 2^31, got " +
                         std::to_string(modulus));
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    a %= p;
    if (a == 0) throw ShapeError("inverse of zero in GF(" + std::to_string(p) + ")");
    return pow(a, p - 2);  // Fermat
}

}  // namespace zigzag

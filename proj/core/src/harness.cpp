#include "zigzag/harness.hpp"

namespace zigzag {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw ShapeError("SplitMix64::below(0)");
    // Rejection sampling to keep the distribution exactly uniform.
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

Matrix random_invertible(SplitMix64& rng, int size, FieldSpec field) {
    Matrix m = Matrix::identity(field, size);
    if (size == 0) return m;
    int steps = 2 * size * size + 2;
    for (int s = 0; s < steps; ++s) {
        switch (rng.below(3)) {
            case 0: {
                int p = int(rng.below(size));
                int q = int(rng.below(size));
                if (p != q) apply_row_op(m, ElemOp::swap(p, q));
                break;
            }
            case 1: {
                int p = int(rng.below(size));
                std::uint32_t c = 1 + std::uint32_t(rng.below(field.p - 1));
                apply_row_op(m, ElemOp::scale(p, c));
                break;
            }
            default: {
                int p = int(rng.below(size));
                int q = int(rng.below(size));
                if (p == q) break;
                std::uint32_t c = std::uint32_t(rng.below(field.p));
                apply_row_op(m, ElemOp::add_mul(p, q, c));
                break;
            }
        }
    }
    return m;
}

Matrix random_invertible(std::uint64_t seed, int size, FieldSpec field) {
    SplitMix64 rng(seed);
    return random_invertible(rng, size, field);
}

ZigzagType random_type(SplitMix64& rng, int length) {
    ZigzagType t;
    for (int i = 0; i < length - 1; ++i)
        t.arrows.push_back(rng.below(2) == 0 ? Arrow::F : Arrow::G);
    return t;
}

PlantedInstance plant(std::uint64_t seed, const ZigzagType& type, int max_intervals,
                      FieldSpec field) {
    SplitMix64 rng(seed);
    int n = type.length();
    PlantedInstance inst;
    inst.seed = seed;
    inst.truth.grid = Barcode::integer_grid(n);

    ZigzagModule sum{field, type, std::vector<int>(n, 0), {}};
    for (int i = 0; i < n - 1; ++i) {
        auto [r, c] = arrow_shape(type, sum.dims, i);
        sum.maps.push_back(Matrix(field, r, c));
    }

    int count = int(rng.below(std::uint64_t(max_intervals) + 1));
    for (int t = 0; t < count; ++t) {
        // Uniform over the n(n+1)/2 subintervals of 1..n.
        std::uint64_t flat = rng.below(std::uint64_t(n) * (n + 1) / 2);
        int b = 1;
        while (flat >= std::uint64_t(n - b + 1)) {
            flat -= n - b + 1;
            ++b;
        }
        int d = b + int(flat);
        sum = direct_sum(sum, interval_module(type, b, d, field));
        inst.truth.add({b, d});
    }

    std::vector<Matrix> bases;
    for (int i = 0; i < n; ++i) bases.push_back(random_invertible(rng, sum.dims[i], field));
    inst.module = change_basis(sum, bases);
    inst.truth.canonicalize();
    return inst;
}

}  // namespace zigzag

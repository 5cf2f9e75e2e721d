#include <doctest.h>

#include "test_util.hpp"
#include "zigzag/decompose.hpp"

using namespace zigzag;
using namespace testutil;

namespace {

const FieldSpec gf2(2);
const FieldSpec gf5(5);

ZigzagModule projection_zigzag(FieldSpec f) {
    ZigzagModule m{f, ZigzagType::parse("gf"), {1, 2, 1},
                   {Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})}};
    return m;
}

// F <- F^2 -> F <- ... -> F of length 2n+1, alternating the two coordinate
// projections. Contains a submodule isomorphic to the full-length interval,
// yet decomposes entirely into short pieces.
ZigzagModule projection_chain(int n, FieldSpec f) {
    std::string type;
    for (int i = 0; i < n; ++i) type += "gf";
    ZigzagModule m{f, ZigzagType::parse(type), {}, {}};
    for (int i = 0; i < 2 * n + 1; ++i) m.dims.push_back(i % 2 == 0 ? 1 : 2);
    for (int i = 0; i < 2 * n; ++i)
        m.maps.push_back(i % 2 == 0 ? Matrix::from_rows(f, {{1, 0}})
                                    : Matrix::from_rows(f, {{0, 1}}));
    return m;
}

ZigzagModule identity_tower(int n, int dim, FieldSpec f) {
    std::string type(n - 1, 'f');
    ZigzagModule m{f, ZigzagType::parse(type), std::vector<int>(n, dim), {}};
    for (int i = 0; i < n - 1; ++i) m.maps.push_back(Matrix::identity(f, dim));
    return m;
}

}  // namespace

TEST_CASE("projection zigzag decomposes into two short intervals") {
    Barcode bc = barcode_of(projection_zigzag(gf2));
    REQUIRE(bc.entries.size() == 2);
    CHECK(bc.multiplicity({1, 2}) == 1);
    CHECK(bc.multiplicity({2, 3}) == 1);

    Barcode bc5 = barcode_of(projection_zigzag(gf5));
    CHECK(bc5.entries == bc.entries);
}

TEST_CASE("projection chains decompose into short intervals, never the long one") {
    for (int n : {2, 3}) {
        Barcode bc = barcode_of(projection_chain(n, gf2));
        CHECK(bc.multiplicity({1, 2}) == 1);
        for (int j = 1; j < n; ++j) CHECK(bc.multiplicity({2 * j, 2 * j + 2}) == 1);
        CHECK(bc.multiplicity({2 * n, 2 * n + 1}) == 1);
        CHECK(bc.total() == n + 1);
        // the long interval is spanned by a submodule but is not a summand
        CHECK(bc.multiplicity({1, 2 * n + 1}) == 0);
    }
}

TEST_CASE("all-identity towers give one full-length interval per dimension") {
    for (int n : {1, 2, 5}) {
        Barcode bc = barcode_of(identity_tower(n, 3, gf5));
        REQUIRE(bc.entries.size() == 1);
        CHECK(bc.entries[0].iv == Interval{1, n});
        CHECK(bc.entries[0].mult == 3);
    }
}

TEST_CASE("zero modules have empty barcodes") {
    ZigzagModule zero{gf2, ZigzagType::parse("fg"), {0, 0, 0},
                      {Matrix(gf2, 0, 0), Matrix(gf2, 0, 0)}};
    CHECK(barcode_of(zero).entries.empty());
}

TEST_CASE("multiplicity table arithmetic") {
    // identity tower: r^k = (a, 0, ..., 0), so c^k = 0 until the last index
    ZigzagType ff = ZigzagType::parse("ff");
    std::vector<std::vector<long>> r = {{2}, {2, 0}, {2, 0, 0}};
    auto c = multiplicities_from_dims(r, ff);
    CHECK(c[0] == std::vector<long>{0});
    CHECK(c[1] == std::vector<long>{0, 0});
    CHECK(c[2] == std::vector<long>{2, 0, 0});

    // projection zigzag r-table
    ZigzagType gf_t = ZigzagType::parse("gf");
    std::vector<std::vector<long>> rp = {{1}, {1, 1}, {1, 0, 0}};
    auto cp = multiplicities_from_dims(rp, gf_t);
    CHECK(cp[0] == std::vector<long>{0});       // nothing ends at 1
    CHECK(cp[1] == std::vector<long>{0, 1});    // [1,2]
    CHECK(cp[2] == std::vector<long>{1, 0, 0}); // [2,3]

    // inconsistent table surfaces as an invariant violation
    std::vector<std::vector<long>> bad = {{0}, {1, 0}};
    CHECK_THROWS_AS(multiplicities_from_dims(bad, ZigzagType::parse("f")), InvariantViolation);
}

TEST_CASE("dimension accounting: interval lengths weigh the total dimension") {
    SplitMix64 rng(211);
    for (int trial = 0; trial < 80; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(6)) + 1);
        ZigzagModule m = random_module(rng, t, 4, f);
        Barcode bc = barcode_of(m);
        long weighted = 0;
        for (const auto& e : bc.entries) weighted += e.mult * (e.iv.d - e.iv.b + 1);
        long total = 0;
        for (int d : m.dims) total += d;
        CHECK(weighted == total);
    }
}

TEST_CASE("difference formula agrees with the intersection formula") {
    SplitMix64 rng(223);
    for (int trial = 0; trial < 120; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(7)) + 1);
        ZigzagModule m = random_module(rng, t, 5, f);
        auto fast = decompose(m).trace.c;
        auto slow = intersection_formula_mults(m);
        CHECK(fast == slow);
    }
}

TEST_CASE("planted barcodes are recovered exactly") {
    SplitMix64 rng(227);
    for (int trial = 0; trial < 150; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(8)) + 1);
        PlantedInstance inst = plant(rng.next(), t, 6, f);
        CHECK(barcode_of(inst.module).entries == inst.truth.entries);
    }
}

TEST_CASE("barcode is invariant under change of basis") {
    SplitMix64 rng(229);
    for (int trial = 0; trial < 60; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(6)) + 1);
        ZigzagModule m = random_module(rng, t, 4, f);
        std::vector<Matrix> bases;
        for (int d : m.dims) bases.push_back(random_invertible(rng, d, f));
        CHECK(barcode_of(change_basis(m, bases)).entries == barcode_of(m).entries);
    }
}

TEST_CASE("restriction commutes with decomposition") {
    SplitMix64 rng(233);
    for (int trial = 0; trial < 40; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(6)) + 1);
        ZigzagModule m = random_module(rng, t, 4, f);
        Barcode whole = barcode_of(m);
        int n = m.length();
        for (int p = 1; p <= n; ++p)
            for (int q = p; q <= n; ++q) {
                Barcode window = barcode_of(restrict(m, p, q));
                std::vector<int> K;
                for (int i = p; i <= q; ++i) K.push_back(i);
                Barcode expected = barcode_restrict(whole, K);
                CHECK(window.entries == expected.entries);
            }
    }
}

TEST_CASE("reversal reflects the barcode") {
    SplitMix64 rng(239);
    for (int trial = 0; trial < 60; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, int(rng.below(7)) + 1);
        ZigzagModule m = random_module(rng, t, 4, f);
        Barcode rev = barcode_of(reverse(m));
        CHECK(rev.entries == reflect_barcode(barcode_of(m), m.length()).entries);
    }
}

TEST_CASE("forward towers: composite map is nonzero exactly when an interval covers it") {
    SplitMix64 rng(241);
    for (int n = 1; n <= 5; ++n) {
        std::string type(n - 1, 'f');
        ZigzagType t = ZigzagType::parse(type);
        for (int trial = 0; trial < 40; ++trial) {
            ZigzagModule m = random_module(rng, t, 3, gf2);
            Barcode bc = barcode_of(m);
            for (int p = 1; p <= n; ++p) {
                Matrix comp = Matrix::identity(gf2, m.dims[p - 1]);
                for (int q = p; q <= n; ++q) {
                    if (q > p) comp = mat_mul(m.maps[q - 2], comp);
                    bool nonzero = !comp.is_zero();
                    bool covered = false;
                    for (const auto& e : bc.entries)
                        if (e.iv.b <= p && q <= e.iv.d) covered = true;
                    CHECK(nonzero == covered);
                }
            }
        }
    }
}

TEST_CASE("large prime fields behave like the small ones") {
    FieldSpec big(2147483647);  // largest prime below 2^31
    SplitMix64 rng(251);
    for (int trial = 0; trial < 20; ++trial) {
        ZigzagType t = random_type(rng, int(rng.below(6)) + 1);
        PlantedInstance inst = plant(rng.next(), t, 5, big);
        CHECK(barcode_of(inst.module).entries == inst.truth.entries);
    }
    CHECK(big.mul(big.p - 1, big.p - 1) == 1);  // (-1)^2
    CHECK(big.mul(big.inv(12345), 12345) == 1);
}

TEST_CASE("long planted chains are recovered") {
    SplitMix64 rng(257);
    for (int trial = 0; trial < 10; ++trial) {
        FieldSpec f = trial % 2 ? gf2 : gf5;
        ZigzagType t = random_type(rng, 12 + int(rng.below(9)));  // lengths 12..20
        PlantedInstance inst = plant(rng.next(), t, 10, f);
        CHECK(barcode_of(inst.module).entries == inst.truth.entries);
    }
}

TEST_CASE("trace shape bookkeeping") {
    ZigzagModule m = projection_zigzag(gf2);
    DecomposeResult res = decompose(m);
    REQUIRE(res.trace.r.size() == 3);
    CHECK(res.trace.r[0] == std::vector<long>{1});
    CHECK(res.trace.r[1] == std::vector<long>{1, 1});
    CHECK(res.trace.r[2] == std::vector<long>{1, 0, 0});
    CHECK(res.trace.bt[2] == std::vector<int>{2, 1, 3});
    CHECK(res.trace.c[1] == std::vector<long>{0, 1});
    CHECK(res.trace.c[2] == std::vector<long>{1, 0, 0});
}

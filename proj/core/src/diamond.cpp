#include "zigzag/diamond.hpp"

#include <set>
#include <string>

#include "zigzag/decompose.hpp"
#include "zigzag/subspace.hpp"

namespace zigzag {

namespace {

void require_interior(int k, int n) {
    if (k < 2 || k > n - 1)
        throw ParseError("diamond index k = " + std::to_string(k) +
                         " must have neighbours on both sides (2 <= k <= " +
                         std::to_string(n - 1) + ")");
}

void require_lower_shape(const ZigzagModule& vminus, int k) {
    validate(vminus);
    require_interior(k, vminus.length());
    if (vminus.type.arrows[k - 2] != Arrow::G || vminus.type.arrows[k - 1] != Arrow::F)
        throw ShapeError("lower module must pass through index " + std::to_string(k) +
                         " with arrows g,f");
}

}  // namespace

DiamondInstance make_diamond(const ZigzagModule& vminus, int k, Matrix f_from_prev,
                             Matrix g_from_next) {
    require_lower_shape(vminus, k);
    DiamondInstance d;
    d.k = k;
    d.vminus = vminus;
    d.vplus = vminus;
    d.vplus.dims[k - 1] = f_from_prev.rows;
    d.vplus.type.arrows[k - 2] = Arrow::F;
    d.vplus.type.arrows[k - 1] = Arrow::G;
    d.vplus.maps[k - 2] = std::move(f_from_prev);
    d.vplus.maps[k - 1] = std::move(g_from_next);
    validate(d.vplus);
    return d;
}

DiamondInstance pushout_diamond(const ZigzagModule& vminus, int k) {
    require_lower_shape(vminus, k);
    const FieldSpec f = vminus.field;
    const Matrix& g_prev = vminus.maps[k - 2];  // U_k -> V_{k-1}
    const Matrix& f_next = vminus.maps[k - 1];  // U_k -> V_{k+1}
    int m = g_prev.rows + f_next.rows;

    // W_k = (V_{k-1} + V_{k+1}) / Z with Z = {(g(u), -f(u))}; the quotient
    // coordinates are read off a basis extension of Z.
    Matrix z = col_basis(vstack(g_prev, mat_neg(f_next)));
    Matrix full = z;
    for (int i = 0; i < m && full.cols < m; ++i) {
        Matrix e(f, m, 1);
        e.at(i, 0) = 1;
        if (!subspace_contains(full, e)) full = hstack(full, e);
    }
    Matrix inv_full = *inverse(full);
    int w = m - z.cols;
    Matrix quot(f, w, m);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < m; ++j) quot.at(i, j) = inv_full.at(z.cols + i, j);

    Matrix f_from_prev(f, w, g_prev.rows);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < g_prev.rows; ++j) f_from_prev.at(i, j) = quot.at(i, j);
    Matrix g_from_next(f, w, f_next.rows);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < f_next.rows; ++j) g_from_next.at(i, j) = quot.at(i, g_prev.rows + j);

    return make_diamond(vminus, k, std::move(f_from_prev), std::move(g_from_next));
}

DiamondInstance random_exact_diamond(std::uint64_t seed, int length, int k, int max_intervals,
                                     FieldSpec field) {
    require_interior(k, length);
    SplitMix64 rng(seed);
    ZigzagType type = random_type(rng, length);
    type.arrows[k - 2] = Arrow::G;
    type.arrows[k - 1] = Arrow::F;
    PlantedInstance inst = plant(rng.next(), type, max_intervals, field);
    return pushout_diamond(inst.module, k);
}

bool check_exact(const DiamondInstance& d) {
    int k = d.k;
    const Matrix& g_prev = d.vminus.maps[k - 2];
    const Matrix& f_next = d.vminus.maps[k - 1];
    const Matrix& f_prev = d.vplus.maps[k - 2];
    const Matrix& g_next = d.vplus.maps[k - 1];
    Matrix d1 = vstack(g_prev, f_next);
    Matrix d2 = hstack(f_prev, mat_neg(g_next));
    return subspaces_equal(col_basis(d1), kernel_basis(d2));
}

namespace {

Interval matched_interval(Interval iv, int k) {
    if (iv.d == k && iv.b <= k - 1) return {iv.b, k - 1};
    if (iv.b == k && iv.d >= k + 1) return {k + 1, iv.d};
    if (iv.d == k - 1) return {iv.b, k};
    if (iv.b == k + 1) return {k, iv.d};
    return iv;
}

}  // namespace

DiamondReport verify_diamond_matching(const DiamondInstance& d) {
    if (!check_exact(d)) throw ShapeError("central diamond is not exact");
    int k = d.k;
    int n = d.vminus.length();

    DiamondReport rep;
    rep.pers_plus = barcode_of(d.vplus);
    rep.pers_minus = barcode_of(d.vminus);
    rep.kk_plus = rep.pers_plus.multiplicity({k, k});
    rep.kk_minus = rep.pers_minus.multiplicity({k, k});

    std::set<Interval> support;
    for (const auto& e : rep.pers_plus.entries) support.insert(e.iv);
    for (const auto& e : rep.pers_minus.entries) support.insert(matched_interval(e.iv, k));
    support.erase({k, k});

    for (Interval iv : support) {
        Interval mv = matched_interval(iv, k);
        long mp = rep.pers_plus.multiplicity(iv);
        long mm = rep.pers_minus.multiplicity(mv);
        if (mp != mm) {
            rep.ok = false;
            rep.detail = "multiplicity of [" + std::to_string(iv.b) + "," + std::to_string(iv.d) +
                         "] in upper barcode is " + std::to_string(mp) + " but [" +
                         std::to_string(mv.b) + "," + std::to_string(mv.d) +
                         "] in lower barcode is " + std::to_string(mm);
            return rep;
        }
    }

    std::vector<int> K;
    for (int i = 1; i <= n; ++i)
        if (i != k) K.push_back(i);
    Barcode rp = barcode_restrict(rep.pers_plus, K);
    Barcode rm = barcode_restrict(rep.pers_minus, K);
    if (!(rp.entries == rm.entries)) {
        rep.ok = false;
        rep.detail = "restricted barcodes differ away from k: " + to_string(rp) + " vs " +
                     to_string(rm);
    }
    return rep;
}

}  // namespace zigzag

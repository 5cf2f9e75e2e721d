#pragma once

#include "zigzag/filtration.hpp"
#include "zigzag/module.hpp"

namespace zigzag {

/// Left-filtration at k: the right-filtration of the reversed tail V[k..n],
/// which is a subspace chain (L_0, ..., L_{n+1-k}) on V_k.
std::vector<Matrix> left_filtration(const ZigzagModule& m, int k);

/// All barcode intervals through index k, computed from the intersection
/// pattern of the right- and left-filtrations on V_k:
///   c_ij = dim(R_i ^ L_j) - dim(R_{i-1} ^ L_j) - dim(R_i ^ L_{j-1}) + dim(R_{i-1} ^ L_{j-1}),
/// the interval being [bt(tau[1..k])_i, dt_k(tau)_j]. This path shares no
/// basis bookkeeping with decompose(), which makes it an independent check.
struct LocalizeResult {
    int k = 1;
    Barcode intervals;
    std::vector<std::vector<long>> meet;  // dim(R_i ^ L_j), 0 <= i <= k, 0 <= j <= n+1-k
};

LocalizeResult localize_at(const ZigzagModule& m, int k);

}  // namespace zigzag

#pragma once

#include <string>

#include "zigzag/harness.hpp"
#include "zigzag/module.hpp"

namespace zigzag {

/// Two zigzag modules that agree everywhere except at index k, where the upper
/// one passes through W_k (arrows f_{k-1}: V_{k-1} -> W_k, g_k: V_{k+1} -> W_k)
/// and the lower one passes through U_k (arrows g_{k-1}: U_k -> V_{k-1},
/// f_k: U_k -> V_{k+1}). Requires 1 < k < n.
struct DiamondInstance {
    ZigzagModule vplus;   // through W_k
    ZigzagModule vminus;  // through U_k
    int k = 2;
};

/// Assemble a diamond from the lower module by supplying the W_k-side maps.
DiamondInstance make_diamond(const ZigzagModule& vminus, int k, Matrix f_from_prev,
                             Matrix g_from_next);

/// Complete the lower module to an exact diamond by the pushout:
/// W_k = (V_{k-1} + V_{k+1}) / {(g_{k-1}(u), -f_k(u))}, with the induced maps.
DiamondInstance pushout_diamond(const ZigzagModule& vminus, int k);

/// Random exact diamond: plant a module, flip it into the g,f shape at k, and
/// complete by pushout.
DiamondInstance random_exact_diamond(std::uint64_t seed, int length, int k, int max_intervals,
                                     FieldSpec field);

/// Exactness of the central square: Im(D_1) = Ker(D_2) for
/// D_1(u) = g_{k-1}(u) + f_k(u) and D_2(v + v') = f_{k-1}(v) - g_k(v').
bool check_exact(const DiamondInstance& d);

struct DiamondReport {
    bool ok = true;
    std::string detail;      // first violated equality, when !ok
    long kk_plus = 0;        // [k,k] count in Pers(V+): unconstrained, recorded only
    long kk_minus = 0;       // [k,k] count in Pers(V-)
    Barcode pers_plus;
    Barcode pers_minus;
};

/// Check the interval matching between Pers(V+) and Pers(V-):
///   [b,k] <-> [b,k-1] for b <= k-1, [k,d] <-> [k+1,d] for d >= k+1,
///   [b,d] <-> [b,d] otherwise, [k,k] unmatched;
/// plus the restricted equality Pers(V+)|_K = Pers(V-)|_K on K = {1..n} \ {k}.
/// Requires an exact central square.
DiamondReport verify_diamond_matching(const DiamondInstance& d);

}  // namespace zigzag

#pragma once

#include <vector>

#include "zigzag/module.hpp"

namespace zigzag {

/// Birth-time index of a type: entry i is the index at which the information
/// in the i-th subquotient of the right-filtration originated. Built by the
/// recursion: start from (1); a forward arrow appends k+1, a backward arrow
/// prepends k+1. Always a permutation of 1..n.
std::vector<int> birth_time_index(const ZigzagType& type);

/// Death-time index at k: n+1 minus the birth-time index of the reversed
/// type over [k, n]. A permutation of k..n.
std::vector<int> death_time_index(const ZigzagType& type, int k);

/// Filtration 0 = R_0 <= R_1 <= ... <= R_depth = V on a space of dimension
/// ambient(), represented against a compatible basis: R_i is spanned by the
/// basis vectors whose phi value is at most i. phi is non-decreasing.
struct FiltrationRep {
    int depth = 1;
    std::vector<int> phi;  // one value in 1..depth per basis vector

    int ambient() const { return int(phi.size()); }
    /// Subquotient dimensions r_1..r_depth, r_i = #phi^{-1}(i).
    std::vector<long> dims() const;
    void check() const;  // throws InvariantViolation if phi is not non-decreasing
};

/// Depth-1 filtration (0, V_1) on a space of dimension a1.
FiltrationRep rf_init(int a1);

/// One propagation step of the right-filtration across the arrow that leaves
/// the current space.
///
/// Forward arrow (matrix edge: V_k -> V_{k+1}): edge is put into unreduced row
/// echelon form; each row operation is a basis change of V_{k+1} and is
/// mirrored onto the neighbour matrix on arrow k+1. Rows with a pivot in
/// column q inherit phi(q); pivotless rows get the new value depth+1.
///
/// Backward arrow (matrix edge: V_{k+1} -> V_k): edge is put into bottom-left
/// column echelon form by column operations, mirrored likewise. Columns with a
/// pivot in row q get phi(q)+1; pivotless columns (the kernel directions) get 1.
/// A final stable permutation of the basis restores non-decreasing phi and is
/// mirrored too.
///
/// next_edge may be null (the processed arrow is the last one); otherwise
/// next_dir says which way the neighbour matrix points.
FiltrationRep rf_step(const FiltrationRep& cur, Arrow dir, Matrix& edge, Matrix* next_edge,
                      Arrow next_dir);

/// Reference oracle: the right-filtration of the truncation V[1..k] as explicit
/// span bases (R_0, ..., R_k) inside V_k, computed with image/preimage subspace
/// operations and no basis mutation.
std::vector<Matrix> rf_abstract(const ZigzagModule& m, int k);

/// Subquotient dimensions of a subspace chain.
std::vector<long> chain_dims(const std::vector<Matrix>& chain);

}  // namespace zigzag

#pragma once

#include "zigzag/filtration.hpp"
#include "zigzag/module.hpp"

namespace zigzag {

/// Per-prefix bookkeeping of the interval decomposition engine. For each
/// k = 1..n it records the subquotient dimensions r^k of the right-filtration
/// over V[1..k], the birth-time index of the truncated type, and the interval
/// multiplicities c^k (intervals ending at k).
struct DecompositionTrace {
    std::vector<std::vector<long>> r;
    std::vector<std::vector<int>> bt;
    std::vector<std::vector<long>> c;
};

struct DecomposeResult {
    Barcode barcode;
    DecompositionTrace trace;
};

/// Interval decomposition of a zigzag module: one left-to-right pass
/// propagating the right-filtration through echelon form, then pure arithmetic
/// on the r-table. The interval [bt(tau[k])_i, k] appears with multiplicity
/// c^k_i; zero multiplicities are omitted.
DecomposeResult decompose(const ZigzagModule& m);

/// Multiplicity table from the r-table alone:
///   forward arrow k:  c^k_i = r^k_i - r^{k+1}_i
///   backward arrow k: c^k_i = r^k_i - r^{k+1}_{i+1}
///   terminal:         c^n_i = r^n_i.
/// A negative value signals an inconsistent table and throws InvariantViolation.
std::vector<std::vector<long>> multiplicities_from_dims(const std::vector<std::vector<long>>& r,
                                                        const ZigzagType& type);

/// Convenience: just the barcode.
Barcode barcode_of(const ZigzagModule& m);

}  // namespace zigzag

#include "zigzag/localize.hpp"

#include <string>

#include "zigzag/subspace.hpp"

namespace zigzag {

std::vector<Matrix> left_filtration(const ZigzagModule& m, int k) {
    int n = m.length();
    if (k < 1 || k > n) throw ParseError("left_filtration: k out of range");
    ZigzagModule tail = reverse(restrict(m, k, n));
    return rf_abstract(tail, tail.length());
}

LocalizeResult localize_at(const ZigzagModule& m, int k) {
    validate(m);
    int n = m.length();
    if (k < 1 || k > n) throw ParseError("localize_at: k out of range");

    std::vector<Matrix> R = rf_abstract(m, k);            // R_0..R_k
    std::vector<Matrix> L = left_filtration(m, k);        // L_0..L_{n+1-k}
    int ni = int(R.size()) - 1;                           // = k
    int nj = int(L.size()) - 1;                           // = n+1-k

    LocalizeResult res;
    res.k = k;
    res.meet.assign(ni + 1, std::vector<long>(nj + 1, 0));
    for (int i = 0; i <= ni; ++i)
        for (int j = 0; j <= nj; ++j)
            res.meet[i][j] = intersect_subspaces(R[i], L[j]).cols;

    std::vector<int> bt = birth_time_index(restrict(m, 1, k).type);
    std::vector<int> dt = death_time_index(m.type, k);

    res.intervals.grid = Barcode::integer_grid(n);
    long covered = 0;
    for (int i = 1; i <= ni; ++i)
        for (int j = 1; j <= nj; ++j) {
            long c = res.meet[i][j] - res.meet[i - 1][j] - res.meet[i][j - 1] +
                     res.meet[i - 1][j - 1];
            if (c < 0)
                throw InvariantViolation("negative localized multiplicity at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            if (c > 0) res.intervals.add({bt[i - 1], dt[j - 1]}, c);
            covered += c;
        }
    if (covered != m.dims[k - 1])
        throw InvariantViolation("localized multiplicities sum to " + std::to_string(covered) +
                                 ", expected dim V_k = " + std::to_string(m.dims[k - 1]));
    res.intervals.canonicalize();
    return res;
}

}  // namespace zigzag

#include "zigzag/decompose.hpp"

#include <string>

namespace zigzag {

std::vector<std::vector<long>> multiplicities_from_dims(const std::vector<std::vector<long>>& r,
                                                        const ZigzagType& type) {
    int n = type.length();
    if (int(r.size()) != n) throw ShapeError("multiplicities_from_dims: r-table has wrong depth");
    std::vector<std::vector<long>> c(n);
    for (int k = 1; k <= n; ++k) {
        c[k - 1].resize(k);
        for (int i = 1; i <= k; ++i) {
            long v;
            if (k == n)
                v = r[k - 1][i - 1];
            else if (type.arrows[k - 1] == Arrow::F)
                v = r[k - 1][i - 1] - r[k][i - 1];
            else
                v = r[k - 1][i - 1] - r[k][i];
            if (v < 0)
                throw InvariantViolation("negative multiplicity c^" + std::to_string(k) + "_" +
                                         std::to_string(i) + " = " + std::to_string(v));
            c[k - 1][i - 1] = v;
        }
    }
    return c;
}

DecomposeResult decompose(const ZigzagModule& m) {
    validate(m);
    int n = m.length();
    std::vector<Matrix> work = m.maps;  // elimination scratch; inputs stay intact

    DecomposeResult res;
    DecompositionTrace& tr = res.trace;

    FiltrationRep phi = rf_init(m.dims[0]);
    ZigzagType prefix;
    tr.r.push_back(phi.dims());
    tr.bt.push_back(birth_time_index(prefix));
    for (int k = 1; k < n; ++k) {
        Matrix* next = k < n - 1 ? &work[k] : nullptr;
        Arrow next_dir = k < n - 1 ? m.type.arrows[k] : Arrow::F;
        phi = rf_step(phi, m.type.arrows[k - 1], work[k - 1], next, next_dir);
        prefix.arrows.push_back(m.type.arrows[k - 1]);
        tr.r.push_back(phi.dims());
        tr.bt.push_back(birth_time_index(prefix));
    }

    tr.c = multiplicities_from_dims(tr.r, m.type);

    res.barcode.grid = Barcode::integer_grid(n);
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
            if (tr.c[k - 1][i - 1] > 0)
                res.barcode.add({tr.bt[k - 1][i - 1], k}, tr.c[k - 1][i - 1]);
    res.barcode.canonicalize();
    return res;
}

Barcode barcode_of(const ZigzagModule& m) { return decompose(m).barcode; }

}  // namespace zigzag

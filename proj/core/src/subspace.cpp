#include "zigzag/subspace.hpp"

namespace zigzag {

namespace {

// Reduced row echelon form; transcript is not needed here.
EchelonResult rref(Matrix m) {
    EchelonResult e = row_echelon(std::move(m));
    const FieldSpec f = e.mat.field;
    for (int k = int(e.pivots.size()) - 1; k >= 0; --k) {
        auto [pr, pc] = e.pivots[k];
        for (int r = 0; r < pr; ++r) {
            std::uint32_t v = e.mat.at(r, pc);
            if (v != 0) apply_row_op(e.mat, ElemOp::add_mul(pr, r, f.neg(v)));
        }
    }
    return e;
}

}  // namespace

Matrix col_basis(const Matrix& m) {
    EchelonResult e = rref(transpose(m));
    Matrix basis(m.field, m.rows, int(e.pivots.size()));
    for (int k = 0; k < int(e.pivots.size()); ++k)
        for (int j = 0; j < m.rows; ++j) basis.at(j, k) = e.mat.at(k, j);
    return basis;
}

Matrix kernel_basis(const Matrix& m) {
    EchelonResult e = rref(m);
    std::vector<int> pivot_of_col(m.cols, -1);
    for (int k = 0; k < int(e.pivots.size()); ++k) pivot_of_col[e.pivots[k].second] = k;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Matrix basis(m.field, m.cols, int(free_cols.size()));
    for (int j = 0; j < int(free_cols.size()); ++j) {
        int fc = free_cols[j];
        basis.at(fc, j) = 1;
        for (int k = 0; k < int(e.pivots.size()); ++k) {
            auto [pr, pc] = e.pivots[k];
            basis.at(pc, j) = m.field.neg(e.mat.at(pr, fc));
        }
    }
    return basis;
}

Matrix image_subspace(const Matrix& map, const Matrix& sub) {
    return col_basis(mat_mul(map, sub));
}

Matrix preimage_subspace(const Matrix& map, const Matrix& sub) {
    if (map.rows != sub.rows) throw ShapeError("preimage_subspace: ambient dimension mismatch");
    Matrix k = kernel_basis(hstack(map, sub));
    Matrix xpart(map.field, map.cols, k.cols);
    for (int i = 0; i < map.cols; ++i)
        for (int j = 0; j < k.cols; ++j) xpart.at(i, j) = k.at(i, j);
    return col_basis(xpart);
}

Matrix intersect_subspaces(const Matrix& s, const Matrix& t) {
    if (s.rows != t.rows) throw ShapeError("intersect_subspaces: ambient dimension mismatch");
    Matrix k = kernel_basis(hstack(s, t));
    Matrix alpha(s.field, s.cols, k.cols);
    for (int i = 0; i < s.cols; ++i)
        for (int j = 0; j < k.cols; ++j) alpha.at(i, j) = k.at(i, j);
    return col_basis(mat_mul(s, alpha));
}

Matrix sum_subspaces(const Matrix& s, const Matrix& t) { return col_basis(hstack(s, t)); }

bool subspace_contains(const Matrix& s, const Matrix& t) {
    return solve_linear(s, t).has_value();
}

bool subspaces_equal(const Matrix& s, const Matrix& t) {
    return subspace_contains(s, t) && subspace_contains(t, s);
}

}  // namespace zigzag

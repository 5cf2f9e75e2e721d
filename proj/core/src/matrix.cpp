#include "zigzag/matrix.hpp"

#include <algorithm>
#include <string>

namespace zigzag {

namespace {

void require_same_field(const Matrix& x, const Matrix& y, const char* what) {
    if (!(x.field == y.field))
        throw ShapeError(std::string(what) + ": field mismatch (GF(" +
                         std::to_string(x.field.p) + ") vs GF(" + std::to_string(y.field.p) + "))");
}

}  // namespace

Matrix Matrix::identity(FieldSpec f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<std::vector<long long>>& rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c)
            throw ShapeError("ragged rows: row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(c));
        for (int j = 0; j < c; ++j) m.at(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "mat_mul");
    if (x.cols != y.rows)
        throw ShapeError("mat_mul: dimension mismatch " + std::to_string(x.rows) + "x" +
                         std::to_string(x.cols) + " * " + std::to_string(y.rows) + "x" +
                         std::to_string(y.cols));
    const FieldSpec& f = x.field;
    Matrix z(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint32_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(v, y.at(k, j)));
        }
    return z;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "mat_add");
    if (x.rows != y.rows || x.cols != y.cols) throw ShapeError("mat_add: dimension mismatch");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.field.add(x.a[i], y.a[i]);
    return z;
}

Matrix mat_neg(const Matrix& x) {
    Matrix z = x;
    for (auto& v : z.a) v = x.field.neg(v);
    return z;
}

Matrix transpose(const Matrix& x) {
    Matrix z(x.field, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "hstack");
    if (x.rows != y.rows) throw ShapeError("hstack: row count mismatch");
    Matrix z(x.field, x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "vstack");
    if (x.cols != y.cols) throw ShapeError("vstack: column count mismatch");
    Matrix z(x.field, x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
    return z;
}

Matrix block_diag(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "block_diag");
    Matrix z(x.field, x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, x.cols + j) = y.at(i, j);
    return z;
}

void apply_row_op(Matrix& m, const ElemOp& op) {
    const FieldSpec& f = m.field;
    switch (op.kind) {
        case ElemOp::Kind::Swap:
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(op.p, j), m.at(op.q, j));
            break;
        case ElemOp::Kind::Scale:
            for (int j = 0; j < m.cols; ++j) m.at(op.p, j) = f.mul(m.at(op.p, j), op.c);
            break;
        case ElemOp::Kind::AddMul:
            for (int j = 0; j < m.cols; ++j)
                m.at(op.q, j) = f.add(m.at(op.q, j), f.mul(op.c, m.at(op.p, j)));
            break;
    }
}

void apply_col_op(Matrix& m, const ElemOp& op) {
    const FieldSpec& f = m.field;
    switch (op.kind) {
        case ElemOp::Kind::Swap:
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, op.p), m.at(i, op.q));
            break;
        case ElemOp::Kind::Scale:
            for (int i = 0; i < m.rows; ++i) m.at(i, op.p) = f.mul(m.at(i, op.p), op.c);
            break;
        case ElemOp::Kind::AddMul:
            for (int i = 0; i < m.rows; ++i)
                m.at(i, op.q) = f.add(m.at(i, op.q), f.mul(op.c, m.at(i, op.p)));
            break;
    }
}

EchelonResult row_echelon(Matrix m) {
    const FieldSpec f = m.field;
    EchelonResult res;
    int pr = 0;  // next pivot row
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        int hit = -1;
        for (int r = pr; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                hit = r;
                break;
            }
        if (hit < 0) continue;
        if (hit != pr) {
            ElemOp op = ElemOp::swap(pr, hit);
            apply_row_op(m, op);
            res.ops.push_back(op);
        }
        if (m.at(pr, c) != 1) {
            ElemOp op = ElemOp::scale(pr, f.inv(m.at(pr, c)));
            apply_row_op(m, op);
            res.ops.push_back(op);
        }
        for (int r = pr + 1; r < m.rows; ++r) {
            std::uint32_t v = m.at(r, c);
            if (v == 0) continue;
            ElemOp op = ElemOp::add_mul(pr, r, f.neg(v));
            apply_row_op(m, op);
            res.ops.push_back(op);
        }
        res.pivots.emplace_back(pr, c);
        ++pr;
    }
    res.mat = std::move(m);
    return res;
}

EchelonResult col_echelon_bl(Matrix m) {
    const FieldSpec f = m.field;
    EchelonResult res;
    int pc = 0;  // next pivot column
    for (int r = m.rows - 1; r >= 0 && pc < m.cols; --r) {
        int hit = -1;
        for (int c = pc; c < m.cols; ++c)
            if (m.at(r, c) != 0) {
                hit = c;
                break;
            }
        if (hit < 0) continue;
        if (hit != pc) {
            ElemOp op = ElemOp::swap(pc, hit);
            apply_col_op(m, op);
            res.ops.push_back(op);
        }
        if (m.at(r, pc) != 1) {
            ElemOp op = ElemOp::scale(pc, f.inv(m.at(r, pc)));
            apply_col_op(m, op);
            res.ops.push_back(op);
        }
        for (int c = pc + 1; c < m.cols; ++c) {
            std::uint32_t v = m.at(r, c);
            if (v == 0) continue;
            ElemOp op = ElemOp::add_mul(pc, c, f.neg(v));
            apply_col_op(m, op);
            res.ops.push_back(op);
        }
        res.pivots.emplace_back(r, pc);
        ++pc;
    }
    res.mat = std::move(m);
    return res;
}

int rank(const Matrix& m) { return int(row_echelon(m).pivots.size()); }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "solve_linear");
    if (a.rows != b.rows)
        throw ShapeError("solve_linear: row count mismatch " + std::to_string(a.rows) + " vs " +
                         std::to_string(b.rows));
    const FieldSpec& f = a.field;
    EchelonResult ech = row_echelon(a);
    Matrix rhs = b;
    for (const ElemOp& op : ech.ops) apply_row_op(rhs, op);
    // Back-substitute to a reduced form: clear entries above each pivot.
    Matrix& u = ech.mat;
    for (int k = int(ech.pivots.size()) - 1; k >= 0; --k) {
        auto [pr, pc] = ech.pivots[k];
        for (int r = 0; r < pr; ++r) {
            std::uint32_t v = u.at(r, pc);
            if (v == 0) continue;
            ElemOp op = ElemOp::add_mul(pr, r, f.neg(v));
            apply_row_op(u, op);
            apply_row_op(rhs, op);
        }
    }
    // Rows without a pivot must have zero right-hand side.
    int npiv = int(ech.pivots.size());
    for (int r = npiv; r < rhs.rows; ++r)
        for (int j = 0; j < rhs.cols; ++j)
            if (rhs.at(r, j) != 0) return std::nullopt;
    Matrix x(f, a.cols, b.cols);
    for (int k = 0; k < npiv; ++k) {
        auto [pr, pc] = ech.pivots[k];
        for (int j = 0; j < b.cols; ++j) x.at(pc, j) = rhs.at(pr, j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    return solve_linear(m, Matrix::identity(m.field, m.rows));
}

}  // namespace zigzag

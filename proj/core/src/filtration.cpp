#include "zigzag/filtration.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "zigzag/subspace.hpp"

namespace zigzag {

std::vector<int> birth_time_index(const ZigzagType& type) {
    std::deque<int> bt{1};
    for (int i = 0; i < int(type.arrows.size()); ++i) {
        int born = i + 2;
        if (type.arrows[i] == Arrow::F)
            bt.push_back(born);
        else
            bt.push_front(born);
    }
    return {bt.begin(), bt.end()};
}

std::vector<int> death_time_index(const ZigzagType& type, int k) {
    int n = type.length();
    if (k < 1 || k > n) throw ParseError("death_time_index: k out of range");
    ZigzagType tail;  // reversal of the type over [k, n]
    for (int i = n - 2; i >= k - 1; --i) tail.arrows.push_back(flip(type.arrows[i]));
    std::vector<int> bt = birth_time_index(tail);
    for (int& v : bt) v = n + 1 - v;
    return bt;
}

std::vector<long> FiltrationRep::dims() const {
    std::vector<long> r(depth, 0);
    for (int v : phi) ++r[v - 1];
    return r;
}

void FiltrationRep::check() const {
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 1 || phi[i] > depth)
            throw InvariantViolation("phi value " + std::to_string(phi[i]) + " out of 1.." +
                                     std::to_string(depth));
        if (i > 0 && phi[i] < phi[i - 1])
            throw InvariantViolation("phi is not non-decreasing");
    }
}

FiltrationRep rf_init(int a1) { return {1, std::vector<int>(a1, 1)}; }

namespace {

// Basis-change duality: an elementary transformation acting on the coordinate
// lines of maps *into* a space acts on maps *out of* it by the inverse
// transpose, and vice versa.
ElemOp dual(const ElemOp& op, const FieldSpec& f) {
    switch (op.kind) {
        case ElemOp::Kind::Swap:
            return op;
        case ElemOp::Kind::Scale:
            return ElemOp::scale(op.p, f.inv(op.c));
        case ElemOp::Kind::AddMul:
            return ElemOp::add_mul(op.q, op.p, f.neg(op.c));
    }
    return op;  // unreachable
}

// Mirror basis changes of V_{k+1}, expressed as row operations on a map into
// V_{k+1}, onto the neighbour matrix.
void mirror_row_ops(const std::vector<ElemOp>& ops, Matrix* next, Arrow next_dir,
                    const FieldSpec& f) {
    if (!next) return;
    for (const ElemOp& op : ops) {
        if (next_dir == Arrow::G)
            apply_row_op(*next, op);  // also a map into V_{k+1}
        else
            apply_col_op(*next, dual(op, f));  // map out of V_{k+1}
    }
}

// Same, for basis changes expressed as column operations on a map out of V_{k+1}.
void mirror_col_ops(const std::vector<ElemOp>& ops, Matrix* next, Arrow next_dir,
                    const FieldSpec& f) {
    if (!next) return;
    for (const ElemOp& op : ops) {
        if (next_dir == Arrow::F)
            apply_col_op(*next, op);
        else
            apply_row_op(*next, dual(op, f));
    }
}

}  // namespace

FiltrationRep rf_step(const FiltrationRep& cur, Arrow dir, Matrix& edge, Matrix* next_edge,
                      Arrow next_dir) {
    cur.check();
    const FieldSpec f = edge.field;
    FiltrationRep next;
    next.depth = cur.depth + 1;

    if (dir == Arrow::F) {
        if (edge.cols != cur.ambient())
            throw ShapeError("rf_step: matrix has " + std::to_string(edge.cols) +
                             " columns, filtration lives on dimension " +
                             std::to_string(cur.ambient()));
        EchelonResult ech = row_echelon(std::move(edge));
        mirror_row_ops(ech.ops, next_edge, next_dir, f);
        next.phi.assign(ech.mat.rows, next.depth);  // pivotless rows are newborn
        for (auto [pr, pc] : ech.pivots) next.phi[pr] = cur.phi[pc];
        edge = std::move(ech.mat);
    } else {
        if (edge.rows != cur.ambient())
            throw ShapeError("rf_step: matrix has " + std::to_string(edge.rows) +
                             " rows, filtration lives on dimension " +
                             std::to_string(cur.ambient()));
        EchelonResult ech = col_echelon_bl(std::move(edge));
        mirror_col_ops(ech.ops, next_edge, next_dir, f);
        next.phi.assign(ech.mat.cols, 1);  // pivotless columns die immediately
        for (auto [pr, pc] : ech.pivots) next.phi[pc] = cur.phi[pr] + 1;
        edge = std::move(ech.mat);

        // The echelon leaves phi non-increasing; restore the representation
        // invariant with one stable permutation, mirrored like any other
        // basis change.
        int m = int(next.phi.size());
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return next.phi[x] < next.phi[y]; });
        std::vector<int> at(m), pos(m);
        std::iota(at.begin(), at.end(), 0);
        std::iota(pos.begin(), pos.end(), 0);
        std::vector<ElemOp> perm;
        for (int i = 0; i < m; ++i) {
            int j = pos[order[i]];
            if (j == i) continue;
            perm.push_back(ElemOp::swap(i, j));
            std::swap(at[i], at[j]);
            pos[at[i]] = i;
            pos[at[j]] = j;
        }
        for (const ElemOp& op : perm) apply_col_op(edge, op);
        mirror_col_ops(perm, next_edge, next_dir, f);
        std::sort(next.phi.begin(), next.phi.end());
    }

    next.check();
    return next;
}

std::vector<Matrix> rf_abstract(const ZigzagModule& m, int k) {
    if (k < 1 || k > m.length()) throw ParseError("rf_abstract: k out of range");
    const FieldSpec f = m.field;
    std::vector<Matrix> chain;
    chain.push_back(Matrix(f, m.dims[0], 0));
    chain.push_back(Matrix::identity(f, m.dims[0]));
    for (int j = 0; j < k - 1; ++j) {
        std::vector<Matrix> out;
        if (m.type.arrows[j] == Arrow::F) {
            for (const Matrix& r : chain) out.push_back(image_subspace(m.maps[j], r));
            out.push_back(Matrix::identity(f, m.dims[j + 1]));
        } else {
            out.push_back(Matrix(f, m.dims[j + 1], 0));
            for (const Matrix& r : chain) out.push_back(preimage_subspace(m.maps[j], r));
        }
        chain = std::move(out);
    }
    return chain;
}

std::vector<long> chain_dims(const std::vector<Matrix>& chain) {
    std::vector<long> r;
    for (std::size_t i = 1; i < chain.size(); ++i)
        r.push_back(chain[i].cols - chain[i - 1].cols);
    return r;
}

}  // namespace zigzag

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zigzag/field.hpp"

namespace zigzag {

/// Dense row-major matrix over GF(p). Zero-row and zero-column matrices are
/// valid values; they represent maps to or from the zero space.
struct Matrix {
    FieldSpec field{2};
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;  // rows*cols entries, reduced mod p

    Matrix() = default;
    Matrix(FieldSpec f, int r, int c) : field(f), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    static Matrix identity(FieldSpec f, int n);
    /// Build from signed entries (reduced mod p); every row must have equal length.
    static Matrix from_rows(FieldSpec f, const std::vector<std::vector<long long>>& rows);

    std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;
};

Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_neg(const Matrix& x);
Matrix transpose(const Matrix& x);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);
Matrix block_diag(const Matrix& x, const Matrix& y);

/// Elementary transformation on the rows or columns of a matrix.
///   Swap:   line p <-> line q
///   Scale:  line p *= c           (c != 0)
///   AddMul: line q += c * line p
struct ElemOp {
    enum class Kind : std::uint8_t { Swap, Scale, AddMul };
    Kind kind;
    int p = 0;
    int q = 0;
    std::uint32_t c = 0;

    static ElemOp swap(int p, int q) { return {Kind::Swap, p, q, 0}; }
    static ElemOp scale(int p, std::uint32_t c) { return {Kind::Scale, p, p, c}; }
    static ElemOp add_mul(int p, int q, std::uint32_t c) { return {Kind::AddMul, p, q, c}; }
};

void apply_row_op(Matrix& m, const ElemOp& op);
void apply_col_op(Matrix& m, const ElemOp& op);

/// Echelon output: the transformed matrix, its pivot positions (0-based
/// (row, col), in pivot order), and the transcript of elementary operations
/// that replays the transformation on the input.
struct EchelonResult {
    Matrix mat;
    std::vector<std::pair<int, int>> pivots;
    std::vector<ElemOp> ops;
};

/// Unreduced row echelon form via row operations only:
///   - each of the top r rows has a 1 (the pivot) as its leftmost nonzero entry,
///   - pivots move strictly rightward going down,
///   - the remaining rows are zero.
/// Pivot search scans rows top to bottom; the first nonzero entry wins.
EchelonResult row_echelon(Matrix m);

/// Column echelon form that begins on the bottom left, via column operations only:
///   - each of the leftmost r columns has a 1 (the pivot) as its lowest nonzero entry,
///   - each pivot lies strictly lower than the pivots of the columns to its right,
///   - the remaining columns are zero.
/// Pivot search scans columns left to right; the first nonzero entry wins.
EchelonResult col_echelon_bl(Matrix m);

int rank(const Matrix& m);

/// Particular solution x of a*x = b (free variables set to 0), or nullopt when
/// some column of b is outside the column space of a.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace zigzag

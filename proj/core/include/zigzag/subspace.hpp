#pragma once

#include "zigzag/matrix.hpp"

namespace zigzag {

// Subspaces of GF(p)^n are handled as span bases: a matrix whose columns are
// the basis vectors. Canonical bases come out of col_basis/kernel_basis, so
// equal subspaces produced through it compare equal as matrices.

/// Canonical basis of the column space (independent columns, reduced form).
Matrix col_basis(const Matrix& m);

/// Canonical basis of the null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Basis of map(span(sub)).
Matrix image_subspace(const Matrix& map, const Matrix& sub);

/// Basis of {x : map x in span(sub)}.
Matrix preimage_subspace(const Matrix& map, const Matrix& sub);

Matrix intersect_subspaces(const Matrix& s, const Matrix& t);
Matrix sum_subspaces(const Matrix& s, const Matrix& t);

/// span(t) <= span(s), decided by solving s x = t.
bool subspace_contains(const Matrix& s, const Matrix& t);
bool subspaces_equal(const Matrix& s, const Matrix& t);

}  // namespace zigzag

#pragma once

#include <set>
#include <string>
#include <vector>

#include "zigzag/module.hpp"

namespace zigzag {

/// Simplex: sorted list of vertex ids.
using Simplex = std::vector<int>;

/// Finite simplicial complex on vertices 0..vertices-1, closed under faces.
/// Simplices are stored sorted, which fixes the basis order of chain spaces.
struct SimplicialComplex {
    int vertices = 0;
    std::set<Simplex> simplices;

    /// Build from a simplex list; sorts vertices, deduplicates, and (when
    /// close_faces, the default) inserts all missing faces.
    static SimplicialComplex build(int vertices, const std::vector<Simplex>& simplices,
                                   bool close_faces = true);

    bool contains(const Simplex& s) const { return simplices.count(s) > 0; }
    int dim() const;
    std::vector<Simplex> simplices_of_dim(int ell) const;
    bool operator==(const SimplicialComplex&) const = default;
};

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);

/// Matrix of the boundary map from ell-chains to (ell-1)-chains, with signs
/// (-1)^i on deletion of the i-th vertex, reduced mod p. The 0-boundary maps
/// to the zero space (0 rows).
Matrix boundary_matrix(const SimplicialComplex& c, int ell, FieldSpec field);

/// Basis data for H_ell: cycle representatives that extend the boundary space
/// to the full cycle space, both as chain vectors over the ell-simplex basis.
struct HomologyBasis {
    int ell = 0;
    Matrix cycles;      // chain-dim x betti, representatives of homology classes
    Matrix boundaries;  // chain-dim x (boundary rank)
    int betti() const { return cycles.cols; }
};

HomologyBasis homology_basis(const SimplicialComplex& c, int ell, FieldSpec field);

/// Matrix of H_ell(src) -> H_ell(dst) induced by inclusion: each representative
/// of src is re-coordinatised in dst's chain space and expressed against dst's
/// (cycles | boundaries) basis; the cycle coordinates form the column.
Matrix induced_map(const SimplicialComplex& src, const SimplicialComplex& dst,
                   const HomologyBasis& src_basis, const HomologyBasis& dst_basis,
                   FieldSpec field);

enum class ZigzagMode { Union, Intersection };

/// A sequence of complexes on a common vertex set plus the choice of
/// interleaving: union mode puts X_i u X_{i+1} between neighbours with arrows
/// pointing in, intersection mode puts X_i n X_{i+1} with arrows pointing out.
/// The derived diagram lives on the half-integer grid 1, 1.5, ..., n,
/// internally indexed 1..2n-1.
struct SimplicialZigzag {
    std::vector<SimplicialComplex> complexes;
    ZigzagMode mode = ZigzagMode::Union;
};

/// Grid labels "1", "1.5", ..., "n" for the 2n-1 internal slots.
std::vector<GridPoint> half_integer_grid(int n);

/// Homology in dimension ell of the interleaved diagram, as a zigzag module of
/// length 2n-1 (type (fg)^{n-1} for unions, (gf)^{n-1} for intersections).
ZigzagModule build_zigzag(const SimplicialZigzag& z, int ell, FieldSpec field);

/// Exactness of H_ell(AnB) -> H_ell(A) + H_ell(B) -> H_ell(AuB) and the
/// connecting-map dimension count: dim Coker(D_2) in degree ell+1 equals
/// dim Ker(D_1) in degree ell.
bool mv_check(const SimplicialComplex& a, const SimplicialComplex& b, int ell, FieldSpec field);

struct StrongDiamondReport {
    bool ok = true;
    std::string detail;  // first violated equality: dimension, slot, multiplicities
};

/// Compare the union and intersection zigzags of a sequence of complexes, for
/// every homology dimension up to ell_max:
///  (a) restricted to the integer slots the two barcodes agree;
///  (b) each half-integer diagonal interval [j,j] of the intersection zigzag in
///      degree ell appears in the union zigzag in degree ell+1 with the same
///      multiplicity;
///  (c) apart from half-integer diagonal intervals, the two barcodes have the
///      same total size in each degree.
StrongDiamondReport verify_strong_diamond(const std::vector<SimplicialComplex>& complexes,
                                          int ell_max, FieldSpec field);

}  // namespace zigzag

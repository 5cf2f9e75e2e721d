#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/matrix.hpp"

namespace zigzag {

/// Direction of the map between adjacent spaces: F is forward (V_i -> V_{i+1}),
/// G is backward (V_i <- V_{i+1}).
enum class Arrow : std::uint8_t { F, G };

inline Arrow flip(Arrow a) { return a == Arrow::F ? Arrow::G : Arrow::F; }

/// The sequence of arrow directions. A diagram with n spaces has n-1 arrows;
/// an empty arrow list is the length-1 type.
struct ZigzagType {
    std::vector<Arrow> arrows;

    int length() const { return int(arrows.size()) + 1; }
    static ZigzagType parse(const std::string& s);  // e.g. "fgg"
    std::string str() const;
    bool operator==(const ZigzagType&) const = default;
};

/// A diagram of GF(p) vector spaces V_1 <-> ... <-> V_n given by one matrix per
/// arrow: forward arrow i carries an a_{i+1} x a_i matrix, backward arrow i an
/// a_i x a_{i+1} matrix. Zero-dimensional spaces are first-class; their maps
/// are empty matrices.
struct ZigzagModule {
    FieldSpec field{2};
    ZigzagType type;
    std::vector<int> dims;    // a_1 .. a_n
    std::vector<Matrix> maps; // one per arrow

    int length() const { return int(dims.size()); }
};

/// Shape check; throws ShapeError naming the offending arrow (1-based).
void validate(const ZigzagModule& m);

/// Expected shape of the matrix on arrow i (0-based): {rows, cols}.
std::pair<int, int> arrow_shape(const ZigzagType& t, const std::vector<int>& dims, int i);

/// The indecomposable supported on [b, d] (1-based): one-dimensional spaces on
/// the interval, identity maps inside it, zero spaces outside.
ZigzagModule interval_module(const ZigzagType& type, int b, int d,
                             FieldSpec field = FieldSpec(2));

ZigzagModule direct_sum(const ZigzagModule& x, const ZigzagModule& y);

/// Re-express the module in new bases: bases[i] is an invertible a_{i+1} x a_{i+1}
/// matrix whose columns are the new basis vectors of V_{i+1} in old coordinates.
/// The result is isomorphic to the input.
ZigzagModule change_basis(const ZigzagModule& m, const std::vector<Matrix>& bases);

/// Truncation to the index window [p, q] (1-based, inclusive).
ZigzagModule restrict(const ZigzagModule& m, int p, int q);

/// Index reversal: space i becomes space n+1-i, every arrow flips direction,
/// and each matrix is re-attached at the mirrored position.
ZigzagModule reverse(const ZigzagModule& m);

/// Closed integer interval [b, d], 1-based module indices.
struct Interval {
    int b = 1;
    int d = 1;
    bool contains(int k) const { return b <= k && k <= d; }
    auto operator<=>(const Interval&) const = default;
};

struct GridPoint {
    int index;          // 1-based position
    std::string label;  // presentation label, e.g. "2" or "1.5"
    bool operator==(const GridPoint&) const = default;
};

struct BarcodeEntry {
    Interval iv;
    long mult = 1;
    std::optional<int> dim;  // homological dimension tag, if any
    bool operator==(const BarcodeEntry&) const = default;
};

/// Multiset of intervals with multiplicities, kept in canonical order
/// (b, then d, then dimension tag). The grid carries one label per index.
struct Barcode {
    std::vector<GridPoint> grid;
    std::vector<BarcodeEntry> entries;

    static std::vector<GridPoint> integer_grid(int n);

    void add(Interval iv, long mult = 1, std::optional<int> dim = std::nullopt);
    void canonicalize();
    long multiplicity(Interval iv, std::optional<int> dim = std::nullopt) const;
    long total() const;  // sum of multiplicities

    bool operator==(const Barcode&) const = default;
};

/// Restriction of a barcode to an index subset K (sorted, 1-based): each
/// interval meeting K survives as its trace on K. Surviving intervals are
/// renumbered to positions within K; original identities live in the labels.
Barcode barcode_restrict(const Barcode& bc, const std::vector<int>& K);

/// Shift all intervals by a fixed offset (used to compare barcodes of
/// restricted modules against restrictions of barcodes).
Barcode barcode_shift(const Barcode& bc, int offset);

std::string to_string(const Barcode& bc);

}  // namespace zigzag

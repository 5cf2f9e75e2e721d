#include "zigzag/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zigzag {

ZigzagType ZigzagType::parse(const std::string& s) {
    ZigzagType t;
    t.arrows.reserve(s.size());
    for (char ch : s) {
        if (ch == 'f')
            t.arrows.push_back(Arrow::F);
        else if (ch == 'g')
            t.arrows.push_back(Arrow::G);
        else
            throw ParseError(std::string("bad type character '") + ch + "', expected f or g");
    }
    return t;
}

std::string ZigzagType::str() const {
    std::string s;
    for (Arrow a : arrows) s += (a == Arrow::F ? 'f' : 'g');
    return s;
}

std::pair<int, int> arrow_shape(const ZigzagType& t, const std::vector<int>& dims, int i) {
    return t.arrows[i] == Arrow::F ? std::pair{dims[i + 1], dims[i]}
                                   : std::pair{dims[i], dims[i + 1]};
}

void validate(const ZigzagModule& m) {
    int n = m.length();
    if (n == 0) throw ShapeError("module must have at least one space");
    if (m.type.length() != n)
        throw ShapeError("type length " + std::to_string(m.type.length()) +
                         " does not match " + std::to_string(n) + " spaces");
    if (int(m.maps.size()) != n - 1)
        throw ShapeError("expected " + std::to_string(n - 1) + " maps, got " +
                         std::to_string(m.maps.size()));
    for (int d : m.dims)
        if (d < 0) throw ShapeError("negative dimension");
    for (int i = 0; i < n - 1; ++i) {
        auto [r, c] = arrow_shape(m.type, m.dims, i);
        if (!(m.maps[i].field == m.field))
            throw ShapeError("arrow " + std::to_string(i + 1) + ": field mismatch");
        if (m.maps[i].rows != r || m.maps[i].cols != c)
            throw ShapeError("arrow " + std::to_string(i + 1) + ": expected " +
                             std::to_string(r) + "x" + std::to_string(c) + " matrix, got " +
                             std::to_string(m.maps[i].rows) + "x" +
                             std::to_string(m.maps[i].cols));
    }
}

ZigzagModule interval_module(const ZigzagType& type, int b, int d, FieldSpec field) {
    int n = type.length();
    if (!(1 <= b && b <= d && d <= n))
        throw ParseError("interval [" + std::to_string(b) + "," + std::to_string(d) +
                         "] out of range for length " + std::to_string(n));
    ZigzagModule m{field, type, std::vector<int>(n, 0), {}};
    for (int i = b; i <= d; ++i) m.dims[i - 1] = 1;
    for (int i = 0; i < n - 1; ++i) {
        auto [r, c] = arrow_shape(type, m.dims, i);
        Matrix mat(m.field, r, c);
        if (r == 1 && c == 1) mat.at(0, 0) = 1;  // identity inside the interval
        m.maps.push_back(std::move(mat));
    }
    return m;
}

ZigzagModule direct_sum(const ZigzagModule& x, const ZigzagModule& y) {
    if (!(x.type == y.type)) throw ShapeError("direct_sum: type mismatch");
    if (!(x.field == y.field)) throw ShapeError("direct_sum: field mismatch");
    ZigzagModule s{x.field, x.type, {}, {}};
    for (int i = 0; i < x.length(); ++i) s.dims.push_back(x.dims[i] + y.dims[i]);
    for (int i = 0; i < x.length() - 1; ++i)
        s.maps.push_back(block_diag(x.maps[i], y.maps[i]));
    return s;
}

ZigzagModule change_basis(const ZigzagModule& m, const std::vector<Matrix>& bases) {
    int n = m.length();
    if (int(bases.size()) != n) throw ShapeError("change_basis: need one basis per index");
    std::vector<Matrix> inv(n);
    for (int i = 0; i < n; ++i) {
        if (bases[i].rows != m.dims[i] || bases[i].cols != m.dims[i])
            throw ShapeError("change_basis: basis " + std::to_string(i + 1) + " has wrong size");
        auto bi = inverse(bases[i]);
        if (!bi) throw ShapeError("change_basis: basis " + std::to_string(i + 1) + " is singular");
        inv[i] = std::move(*bi);
    }
    ZigzagModule out = m;
    for (int i = 0; i < n - 1; ++i) {
        if (m.type.arrows[i] == Arrow::F)
            out.maps[i] = mat_mul(inv[i + 1], mat_mul(m.maps[i], bases[i]));
        else
            out.maps[i] = mat_mul(inv[i], mat_mul(m.maps[i], bases[i + 1]));
    }
    return out;
}

ZigzagModule restrict(const ZigzagModule& m, int p, int q) {
    int n = m.length();
    if (!(1 <= p && p <= q && q <= n))
        throw ParseError("window [" + std::to_string(p) + "," + std::to_string(q) +
                         "] out of range for length " + std::to_string(n));
    ZigzagModule out{m.field, {}, {}, {}};
    out.type.arrows.assign(m.type.arrows.begin() + (p - 1), m.type.arrows.begin() + (q - 1));
    out.dims.assign(m.dims.begin() + (p - 1), m.dims.begin() + q);
    out.maps.assign(m.maps.begin() + (p - 1), m.maps.begin() + (q - 1));
    return out;
}

ZigzagModule reverse(const ZigzagModule& m) {
    int n = m.length();
    ZigzagModule out{m.field, {}, {}, {}};
    out.dims.assign(m.dims.rbegin(), m.dims.rend());
    for (int i = n - 2; i >= 0; --i) {
        out.type.arrows.push_back(flip(m.type.arrows[i]));
        out.maps.push_back(m.maps[i]);
    }
    return out;
}

std::vector<GridPoint> Barcode::integer_grid(int n) {
    std::vector<GridPoint> g;
    g.reserve(n);
    for (int i = 1; i <= n; ++i) g.push_back({i, std::to_string(i)});
    return g;
}

void Barcode::add(Interval iv, long mult, std::optional<int> dim) {
    if (mult == 0) return;
    if (mult < 0) throw InvariantViolation("barcode multiplicity must be positive");
    for (auto& e : entries)
        if (e.iv == iv && e.dim == dim) {
            e.mult += mult;
            return;
        }
    entries.push_back({iv, mult, dim});
    canonicalize();
}

void Barcode::canonicalize() {
    std::sort(entries.begin(), entries.end(), [](const BarcodeEntry& x, const BarcodeEntry& y) {
        return std::tie(x.iv.b, x.iv.d, x.dim) < std::tie(y.iv.b, y.iv.d, y.dim);
    });
}

long Barcode::multiplicity(Interval iv, std::optional<int> dim) const {
    for (const auto& e : entries)
        if (e.iv == iv && e.dim == dim) return e.mult;
    return 0;
}

long Barcode::total() const {
    long t = 0;
    for (const auto& e : entries) t += e.mult;
    return t;
}

Barcode barcode_restrict(const Barcode& bc, const std::vector<int>& K) {
    std::vector<int> sorted = K;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Position of each original index inside K, 1-based.
    std::map<int, int> pos;
    Barcode out;
    for (int k : sorted) {
        pos[k] = int(pos.size()) + 1;
        std::string label = std::to_string(k);
        for (const auto& g : bc.grid)
            if (g.index == k) label = g.label;
        out.grid.push_back({pos[k], label});
    }
    for (const auto& e : bc.entries) {
        int lo = 0, hi = 0;
        for (const auto& [k, p] : pos)
            if (e.iv.contains(k)) {
                if (lo == 0) lo = p;
                hi = p;
            }
        if (lo != 0) out.add({lo, hi}, e.mult, e.dim);
    }
    out.canonicalize();
    return out;
}

Barcode barcode_shift(const Barcode& bc, int offset) {
    Barcode out = bc;
    for (auto& g : out.grid) g.index += offset;
    for (auto& e : out.entries) {
        e.iv.b += offset;
        e.iv.d += offset;
    }
    return out;
}

std::string to_string(const Barcode& bc) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : bc.entries) {
        if (!first) os << ", ";
        first = false;
        os << "[" << e.iv.b << "," << e.iv.d << "]";
        if (e.mult != 1) os << "x" << e.mult;
        if (e.dim) os << " (H" << *e.dim << ")";
    }
    os << "}";
    return os.str();
}

}  // namespace zigzag

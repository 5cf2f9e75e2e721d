#include "zigzag/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zigzag/decompose.hpp"

namespace zigzag {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing required key \"") + key + "\"");
    return j.at(key);
}

FieldSpec field_of(const json& j) {
    json p = require(j, "field");
    if (!p.is_number_unsigned()) throw ParseError("\"field\" must be a positive integer");
    return FieldSpec(p.get<std::uint32_t>());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, FieldSpec f, int rows, int cols, int arrow) {
    std::string where = "map " + std::to_string(arrow);
    if (!j.is_array()) throw ParseError(where + ": matrix must be an array of rows");
    if (int(j.size()) != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || int(row.size()) != cols)
            throw ParseError(where + ": row " + std::to_string(i + 1) + " must have " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            if (!row.at(c).is_number_integer())
                throw ParseError(where + ": entries must be integers");
            m.at(i, c) = f.reduce(row.at(c).get<long long>());
        }
    }
    return m;
}

}  // namespace

std::string module_to_json(const ZigzagModule& m) {
    json j;
    j["field"] = m.field.p;
    j["type"] = m.type.str();
    j["dims"] = m.dims;
    json maps = json::array();
    for (int i = 0; i < int(m.maps.size()); ++i) {
        json e;
        e["dir"] = m.type.arrows[i] == Arrow::F ? "f" : "g";
        e["matrix"] = matrix_to_json(m.maps[i]);
        maps.push_back(std::move(e));
    }
    j["maps"] = std::move(maps);
    return dump(j);
}

ZigzagModule module_from_json(const std::string& text) {
    json j = parse(text);
    ZigzagModule m{field_of(j), {}, {}, {}};
    json type = require(j, "type");
    if (!type.is_string()) throw ParseError("\"type\" must be a string over f,g");
    m.type = ZigzagType::parse(type.get<std::string>());
    json dims = require(j, "dims");
    if (!dims.is_array()) throw ParseError("\"dims\" must be an array");
    for (const json& d : dims) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw ParseError("\"dims\" entries must be non-negative integers");
        m.dims.push_back(d.get<int>());
    }
    json maps = require(j, "maps");
    if (!maps.is_array() || int(maps.size()) != m.type.length() - 1)
        throw ParseError("\"maps\" must list one entry per arrow (" +
                         std::to_string(m.type.length() - 1) + ")");
    if (int(m.dims.size()) != m.type.length())
        throw ParseError("\"dims\" length does not match the type");
    for (int i = 0; i < int(maps.size()); ++i) {
        const json& e = maps.at(i);
        std::string dir = require(e, "dir").get<std::string>();
        std::string want = m.type.arrows[i] == Arrow::F ? "f" : "g";
        if (dir != want)
            throw ParseError("map " + std::to_string(i + 1) + ": dir \"" + dir +
                             "\" disagrees with type arrow \"" + want + "\"");
        auto [r, c] = arrow_shape(m.type, m.dims, i);
        m.maps.push_back(matrix_from_json(require(e, "matrix"), m.field, r, c, i + 1));
    }
    validate(m);
    return m;
}

std::string complexes_to_json(const ComplexSequenceFile& f) {
    json j;
    j["field"] = f.field.p;
    j["vertices"] = f.vertices;
    j["mode"] = f.mode == ZigzagMode::Union ? "union" : "intersection";
    j["dims"] = json::array({f.ell_min, f.ell_max});
    json cs = json::array();
    for (const auto& c : f.complexes) {
        json simps = json::array();
        for (const Simplex& s : c.simplices) simps.push_back(s);
        cs.push_back(std::move(simps));
    }
    j["complexes"] = std::move(cs);
    return dump(j);
}

ComplexSequenceFile complexes_from_json(const std::string& text, std::string* warnings) {
    json j = parse(text);
    ComplexSequenceFile f;
    f.field = field_of(j);
    json v = require(j, "vertices");
    if (!v.is_number_unsigned()) throw ParseError("\"vertices\" must be a non-negative integer");
    f.vertices = v.get<int>();
    std::string mode = require(j, "mode").get<std::string>();
    if (mode == "union")
        f.mode = ZigzagMode::Union;
    else if (mode == "intersection")
        f.mode = ZigzagMode::Intersection;
    else
        throw ParseError("\"mode\" must be \"union\" or \"intersection\"");
    json dims = require(j, "dims");
    if (!dims.is_array() || dims.size() != 2 || !dims.at(0).is_number_integer() ||
        !dims.at(1).is_number_integer())
        throw ParseError("\"dims\" must be [ell_min, ell_max]");
    f.ell_min = dims.at(0).get<int>();
    f.ell_max = dims.at(1).get<int>();
    if (f.ell_min < 0 || f.ell_min > f.ell_max) throw ParseError("bad dimension range");
    json cs = require(j, "complexes");
    if (!cs.is_array() || cs.empty()) throw ParseError("\"complexes\" must be a non-empty array");
    int idx = 0;
    for (const json& item : cs) {
        ++idx;
        if (!item.is_array())
            throw ParseError("complex " + std::to_string(idx) + " must be a simplex list");
        std::vector<Simplex> simps;
        for (const json& s : item) {
            if (!s.is_array()) throw ParseError("simplices must be vertex arrays");
            Simplex simplex;
            for (const json& vtx : s) {
                if (!vtx.is_number_integer()) throw ParseError("vertices must be integers");
                simplex.push_back(vtx.get<int>());
            }
            simps.push_back(std::move(simplex));
        }
        SimplicialComplex closed = SimplicialComplex::build(f.vertices, simps, true);
        SimplicialComplex raw;
        for (Simplex s : simps) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (!s.empty()) raw.simplices.insert(std::move(s));
        }
        if (warnings && raw.simplices.size() != closed.simplices.size())
            *warnings += "complex " + std::to_string(idx) + ": added " +
                         std::to_string(closed.simplices.size() - raw.simplices.size()) +
                         " missing faces\n";
        f.complexes.push_back(std::move(closed));
    }
    return f;
}

std::string barcode_to_json(const Barcode& bc) {
    json j;
    json grid = json::array();
    for (const auto& g : bc.grid) grid.push_back(g.label);
    j["grid"] = std::move(grid);
    json entries = json::array();
    Barcode sorted = bc;
    sorted.canonicalize();
    for (const auto& e : sorted.entries) {
        json it;
        auto label = [&](int idx) -> std::string {
            for (const auto& g : bc.grid)
                if (g.index == idx) return g.label;
            return std::to_string(idx);
        };
        it["birth"] = label(e.iv.b);
        it["death"] = label(e.iv.d);
        it["multiplicity"] = e.mult;
        it["dim"] = e.dim ? json(*e.dim) : json(nullptr);
        entries.push_back(std::move(it));
    }
    j["entries"] = std::move(entries);
    return dump(j);
}

Barcode barcode_from_json(const std::string& text) {
    json j = parse(text);
    Barcode bc;
    json grid = require(j, "grid");
    if (!grid.is_array()) throw ParseError("\"grid\" must be an array of labels");
    int idx = 0;
    for (const json& g : grid) {
        if (!g.is_string()) throw ParseError("grid labels must be strings");
        std::string label = g.get<std::string>();
        for (const auto& seen : bc.grid)
            if (seen.label == label)
                throw ParseError("duplicate grid label \"" + label + "\"");
        bc.grid.push_back({++idx, std::move(label)});
    }
    auto index_of = [&](const std::string& label) {
        for (const auto& g : bc.grid)
            if (g.label == label) return g.index;
        throw ParseError("label \"" + label + "\" is not on the grid");
    };
    json entries = require(j, "entries");
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
    for (const json& e : entries) {
        int b = index_of(require(e, "birth").get<std::string>());
        int d = index_of(require(e, "death").get<std::string>());
        json mult = require(e, "multiplicity");
        if (!mult.is_number_integer() || mult.get<long long>() < 1)
            throw ParseError("\"multiplicity\" must be a positive integer");
        json dim = require(e, "dim");
        std::optional<int> dim_tag;
        if (!dim.is_null()) {
            if (!dim.is_number_integer()) throw ParseError("\"dim\" must be an integer or null");
            dim_tag = dim.get<int>();
        }
        if (b > d) throw ParseError("entry with birth after death");
        bc.add({b, d}, mult.get<long>(), dim_tag);
    }
    bc.canonicalize();
    return bc;
}

std::string trace_to_json(const DecompositionTrace& tr) {
    json j;
    j["r"] = tr.r;
    j["bt"] = tr.bt;
    j["c"] = tr.c;
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace zigzag

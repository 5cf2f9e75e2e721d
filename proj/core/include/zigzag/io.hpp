#pragma once

#include <string>
#include <vector>

#include "zigzag/homology.hpp"
#include "zigzag/module.hpp"

namespace zigzag {

// JSON file formats. Emission is canonical (fixed key order, two-space
// indent, trailing newline), so parse-then-emit is the identity on canonical
// files. The field modulus is mandatory in every file.

std::string module_to_json(const ZigzagModule& m);
ZigzagModule module_from_json(const std::string& text);

/// A sequence of complexes on a shared vertex set, with the zigzag mode and
/// the homological dimension range to process.
struct ComplexSequenceFile {
    FieldSpec field{2};
    int vertices = 0;
    ZigzagMode mode = ZigzagMode::Union;
    int ell_min = 0;
    int ell_max = 0;
    std::vector<SimplicialComplex> complexes;
};

std::string complexes_to_json(const ComplexSequenceFile& f);
/// Simplex lists are face-closed on load; when that adds simplices a note is
/// appended to *warnings (if given).
ComplexSequenceFile complexes_from_json(const std::string& text, std::string* warnings = nullptr);

std::string barcode_to_json(const Barcode& bc);
Barcode barcode_from_json(const std::string& text);

/// r/b/c tables of a decomposition, for --trace output.
std::string trace_to_json(const struct DecompositionTrace& tr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace zigzag

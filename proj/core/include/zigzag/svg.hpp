#pragma once

#include <string>

#include "zigzag/module.hpp"

namespace zigzag {

enum class FigureStyle { Barcode, Diagram };

/// Self-contained SVG rendering of a barcode. Barcode style draws one
/// horizontal <line class="bar"> per interval copy (multiplicities expanded),
/// stacked in canonical order. Diagram style draws one <circle class="pt"> per
/// distinct (birth, death, dim) on or above the diagonal, annotated with the
/// multiplicity when it exceeds one. Grid labels that parse as numbers place
/// the coordinates; an empty barcode renders axes only.
std::string render_figure(const Barcode& bc, FigureStyle style);

}  // namespace zigzag

#pragma once

// Four-color pictures of a permutation. Cells are colored by the class of
// their image (even dims only; odd dims render uncolored).

#include "gridsep/grid.hpp"

#include <string>

namespace gridsep {

// One text row per grid row. Each cell is "(i,j)" wrapped in its class glyph:
// '#' dark blue, '.' light blue, '%' dark red, '\'' light red.
std::string render_ascii(const GridPermutation& pi);

std::string render_svg(const GridPermutation& pi);

} // namespace gridsep

#pragma once

#include <string>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

// Draws the diagram on a circle: positions equally spaced clockwise with the
// infinity point leftmost, one path per arc copy, parallel copies nested at
// distinct depths. Output is byte-identical for identical diagrams.

// SVG 1.1 document.
std::string render_svg(const ArcDiagram& d);

// Standalone LaTeX document using tikz.
std::string render_tikz(const ArcDiagram& d);

}  // namespace arcdiag

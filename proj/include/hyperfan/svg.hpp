#pragma once

#include <string>

#include "hyperfan/fan.hpp"

namespace hyperfan {

// Renders a toric diagram (with its triangulation edges, when present) as a
// standalone SVG.  The squaring shear is applied for presentation; lattice
// spacing 40 px, dot radius 4, polygon stroke 2.
std::string diagram_svg(const ToricDiagram& d);

}  // namespace hyperfan

#pragma once

// Deterministic SVG rendering: events at integer x, strands at integer y,
// cusps as semicircular arcs.

#include <string>

#include "legendrian/diagram.hpp"
#include "legendrian/front.hpp"

namespace legendrian {

std::string render_front_svg(const FrontDiagram& d);
std::string render_resolved_svg(const FrontDiagram& d);

}  // namespace legendrian

#pragma once

#include <string>

#include "cactuslab/cacti.hpp"
#include "cactuslab/discs.hpp"

namespace cactuslab {

/* Static SVG 1.1 pictures.  Geometry stays exact as long as possible
 * and every number is printed with fixed six decimals, so a given
 * element always renders to the same bytes. */

// big circle, little circles with frame tick and index label, marked
// point of the ambient disc at (1, 0)
std::string render_discs(const FramedDiscConfig& a);

// lobes as tangent circles sized by the time the traversal spends on
// them, local marked points, global marked point, index labels
std::string render_cactus(const Cactus& c);

}  // namespace cactuslab

#pragma once

#include <string>

#include "intnorm/homology.hpp"
#include "intnorm/polytope.hpp"

namespace intnorm {

/// Polytope printout: `dim <d>` then one `v <c1> ... <cd>` line per vertex
/// in lexicographic order.
std::string to_text(const LatticePolytope& p);

/// Reads `v <x> <y>` lines ('#' comments allowed) and hulls the points.
LatticePolytope parse_polygon(const std::string& text);

/// Comma-separated integer class vector, e.g. "1,0,0,-2".
ClassVector parse_class_vector(const std::string& text);

}  // namespace intnorm

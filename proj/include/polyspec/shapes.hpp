#pragma once

#include "polyspec/geometry.hpp"

#include <vector>

namespace polyspec::shapes {

/// Axis-aligned box [lo, lo + size] with the Kuhn triangulation (d! simplices).
Polytope box(const RationalVector& lo, const RationalVector& size);

/// [0,1]^d, Kuhn-triangulated.
Polytope unit_cube(std::size_t d);

/// conv(0, e_1, ..., e_d).
Polytope standard_simplex(std::size_t d);

/// Union of unit squares/cubes at the given integer lower corners.
Polytope unit_cells(std::size_t d, const std::vector<std::vector<long>>& corners);

/// Three unit squares forming an L: cells (0,0), (1,0), (0,1).
Polytope l_tromino();

}  // namespace polyspec::shapes

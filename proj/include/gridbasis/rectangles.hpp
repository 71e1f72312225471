#pragma once

#include <array>
#include <vector>

#include "gridbasis/core.hpp"

namespace gridbasis {

/// An axis-parallel rectangle with an integer coefficient. The four vertices
/// P, Q, R, S are consecutive corners; the term contributes
/// coeff * (+1, -1, +1, -1) at P=(lo1,lo2), Q=(hi1,lo2), R=(hi1,hi2),
/// S=(lo1,hi2), the remaining coordinates being fixed.
struct RectangleTerm {
    int axis1 = 0, axis2 = 1;  // 0-based, axis1 < axis2
    int lo1 = 1, hi1 = 2;      // values on axis1, lo1 < hi1
    int lo2 = 1, hi2 = 2;      // values on axis2, lo2 < hi2
    std::vector<std::pair<int, int>> fixed;  // (axis, value), increasing axes
    Int coeff = 1;

    /// P, Q, R, S in order; signs alternate +, -, +, -.
    std::array<Point, 4> vertices(const GridShape& shape) const;

    bool operator==(const RectangleTerm&) const = default;
};

/// Pointwise sum of the coefficient-weighted simple functions, returned on
/// the union of all vertices (entries may cancel to zero). The result is
/// always an annihilation function of the grid.
WeightFunction eval_rectangles(const std::vector<RectangleTerm>& terms,
                               const GridShape& shape);

/// Writes an annihilation function of the grid as an integer combination of
/// simple rectangle functions, one pass from "many coordinates above 1" down
/// to the cross. Throws LayerError when g is not annihilating.
std::vector<RectangleTerm> decompose_into_rectangles(const WeightFunction& g);

/// True iff the terms re-evaluate to g pointwise on the whole grid.
bool verify_decomposition(const WeightFunction& g,
                          const std::vector<RectangleTerm>& terms);

/// Expands each term into |coeff| copies with coefficient sign(coeff); a
/// coefficient of -1 is itself a simple function (rotate the vertex labels).
std::vector<RectangleTerm> expand_unit_coefficients(
    const std::vector<RectangleTerm>& terms);

}  // namespace gridbasis

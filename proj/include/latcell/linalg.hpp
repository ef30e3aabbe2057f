// Dense exact linear algebra on small rational matrices (dim <= ~8).
#pragma once

#include <optional>
#include <vector>

#include "latcell/rational.hpp"

namespace latcell {

using RatMatrix = std::vector<RatVec>;

/// Row rank via Gaussian elimination (copy; input untouched).
int rank(RatMatrix m);

/// Determinant of a square matrix.
Rat det(RatMatrix m);

/// Solves the square system a * x = b; nullopt when singular.
std::optional<RatVec> solve_square(RatMatrix a, RatVec b);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_rank(const std::vector<RatVec>& points);

/// Coordinate positions whose projection is a bijection of the affine hull
/// onto R^d (the pivot columns of the difference matrix). Size == affine_rank.
std::vector<int> affine_pivot_coords(const std::vector<RatVec>& points);

}  // namespace latcell

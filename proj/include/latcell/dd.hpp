// Double description method for pointed polyhedral cones over exact
// rationals. One routine serves both representation conversions: vertex
// enumeration runs it on the homogenization cone, facet enumeration on the
// dual cone of the homogenized point list.
#pragma once

#include <vector>

#include "latcell/linalg.hpp"
#include "latcell/rational.hpp"

namespace latcell {

/// Extreme rays (primitive integer vectors, sorted lex) of the cone
/// { y in R^D : row . y >= 0 for every row }. The cone must be pointed
/// (constraint matrix of full column rank); otherwise precondition_error.
std::vector<IntVec> dd_extreme_rays(const std::vector<RatVec>& rows);

}  // namespace latcell

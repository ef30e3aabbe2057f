// Exact rational linear programming: dictionary simplex with Bland's rule.
// No tolerances anywhere; termination is guaranteed by the pivoting rule.
#pragma once

#include <vector>

#include "latcell/linalg.hpp"
#include "latcell/rational.hpp"

namespace latcell {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  RatVec x;  // structural variables, empty unless Optimal
};

/// maximize c.x subject to A x <= b, x >= 0
LpSolution simplex_max(const RatMatrix& a, const RatVec& b, const RatVec& c);

/// maximize c.x subject to A x <= b, x free (solved via x = u - w)
LpSolution simplex_max_free(const RatMatrix& a, const RatVec& b, const RatVec& c);

/// Is { x >= 0 : A x <= b } nonempty?
bool lp_feasible(const RatMatrix& a, const RatVec& b);

/// Exact membership of p in the convex hull of a point list.
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p);

}  // namespace latcell

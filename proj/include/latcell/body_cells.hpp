// Integer cells in convex bodies and their coordinate projections, the best
// cell-carrying projection, and exact cube-fitting (the continuous
// combinatorial dimension).
#pragma once

#include <map>

#include "latcell/point_set.hpp"
#include "latcell/polytope.hpp"

namespace latcell {

/// Bases a of lattice cells [a, a+1]^d contained in the body (corner
/// containment; by convexity this equals cube containment).
std::vector<IntVec> lattice_cell_bases(const RationalPolytope& body);

/// Cells of P_I Z^n contained in the projection of the body onto I.
std::vector<IntegerCell> count_integer_cells_body(const RationalPolytope& body,
                                                  const IndexSet& coords);

struct BestProjection {
  IndexSet coords;
  long long cells = 0;
  Rat sixth_volume;    // vol(K/6), the hypothesis side of the cell bound
  Rat quarter_bound;   // vol(K/4) - 2^{-n}, the guaranteed count
};

/// The projection with the most integer cells (ties: smallest cardinality,
/// then lexicographic), reported together with the volume bounds it is
/// measured against.
BestProjection best_cell_projection(const RationalPolytope& body);

struct CubePlacement {
  Rat side;      // 0 when no cube fits (degenerate projection)
  RatVec corner; // lower corner h; the cube is h + side * {0,1}^I
};

/// Exact maximum side of an axis-aligned cube translate inside the projection
/// onto `coords`, as a single rational LP over the projection's facets.
CubePlacement max_cube_side(const RationalPolytope& body, const IndexSet& coords);

/// v(K, t): the largest |I| whose projection contains a cube of side t.
int comb_dimension_body(const RationalPolytope& body, const Rat& t);

/// Exact cube side per index set, plus the per-rank maxima; the full step
/// function of t -> v(K, t).
struct CubeSideProfile {
  std::map<IndexSet, Rat> side;
  std::vector<Rat> max_by_rank;  // index k-1: max side over |I| = k
};
CubeSideProfile cube_side_profile(const RationalPolytope& body);

}  // namespace latcell

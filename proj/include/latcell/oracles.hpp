// Independent brute-force reference implementations, used only by tests and
// acceptance runs. Written from the definitions; no shared code with the main
// computation paths (membership here goes through an internal convex
// combination solver, not the facet machinery).
#pragma once

#include <functional>

#include "latcell/body_ratios.hpp"
#include "latcell/point_set.hpp"
#include "latcell/polytope.hpp"

namespace latcell {

struct McEstimate {
  double value = 0;
  double half_width_95 = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  bool zero_hits = false;
};

/// Literal transcription of the coordinate convex hull membership condition.
bool oracle_cconv(const IntegerPointSet& a, const IntVec& x);

/// Shattering dimension lower bound by exhaustive level search over a fine
/// grid spanning the coordinate range. grid_step must divide t or be <= t/4.
int grid_shatter_search(const IntegerPointSet& a, const Rat& t, const Rat& grid_step);

/// Hit-rate Monte Carlo volume of a polytope (membership via an internal
/// exact-arithmetic-free convex combination check).
McEstimate mc_volume(const RationalPolytope& body, const ConstantsConfig& cfg);

/// Hit-rate Monte Carlo volume of an arbitrary membership oracle over a box.
McEstimate mc_volume(const std::function<bool(const std::vector<double>&)>& member,
                     const std::vector<double>& lo, const std::vector<double>& hi,
                     const ConstantsConfig& cfg);

/// Corner-scan cell count in a coordinate projection of a body, with its own
/// exact membership path.
long long exhaustive_cell_count(const RationalPolytope& body, const IndexSet& coords);

}  // namespace latcell

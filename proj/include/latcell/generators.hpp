// Deterministic seeded instance families for tests and acceptance runs.
#pragma once

#include <cstdint>
#include <string>

#include "latcell/point_set.hpp"
#include "latcell/polytope.hpp"

namespace latcell {

struct GenSpec {
  std::string family;
  std::uint64_t seed = 0;
  int n = 2;
  int m = 8;                // point count for random hulls
  double density = 0.5;     // inclusion probability for random discrete sets
  long long grid_max = 3;   // M for full_grid / diagonal
  std::vector<long long> box_bounds;  // N_i for box_random
  RatVec lengths;           // pancake edge lengths / parallelepiped semiaxes
  Rat scale = Rat(1);       // cube half-side / cross radius / hull coordinate range
  double p = 2.0;           // lp_ball parameter
  bool symmetric = false;   // close random hulls under negation
};

/// Families: boolean_random(n, density), box_random(n, N_i, density),
/// diagonal(n, M), full_grid(n, M). Same spec, same instance.
IntegerPointSet gen_discrete(const GenSpec& spec);

/// Families: cube(n, s), parallelepiped(a_i), cross(n, r),
/// random_hull(n, m, scale[, symmetric]), pancake(lengths), lp_ball(p, n).
/// Random vertices are drawn from a bounded integer lattice and divided by a
/// fixed denominator, so exact arithmetic stays small.
RationalPolytope gen_polytope(const GenSpec& spec);

/// The coordinate convex sharpness body: points of B_p^n with at least k
/// coordinates of magnitude at most eps.
class OracleBody {
 public:
  OracleBody(int dim, int k, double p, Rat eps);

  int dim() const { return dim_; }
  int small_coords_required() const { return k_; }
  double p() const { return p_; }
  const Rat& eps() const { return eps_; }

  bool contains(const std::vector<double>& x) const;
  /// Exact membership for p in {1, 2, inf}.
  bool contains_exact(const RatVec& x) const;
  std::pair<std::vector<double>, std::vector<double>> bounding_box() const;

 private:
  int dim_;
  int k_;
  double p_;
  Rat eps_;
};

OracleBody gen_sharpness_body(int n, int k, double p, const Rat& eps);

}  // namespace latcell

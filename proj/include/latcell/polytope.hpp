// Exact rational polytope engine at desk scale (dim <= ~7): canonical V- and
// H-representations, exact volume by recursive triangulation, coordinate
// projections and sections, polarity, hulls and intersections.
//
// Vertices are always the exact extreme points, sorted lexicographically.
// Facets are primitive integer halfspaces normal.x <= offset, derived on
// demand for full-dimensional bodies and cached on the value.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "latcell/dd.hpp"
#include "latcell/index_set.hpp"
#include "latcell/rational.hpp"

namespace latcell {

struct Facet {
  IntVec normal;
  Int offset;
};

/// Coordinate subspace: coordinates outside `kept` are fixed to zero.
struct CoordSubspace {
  IndexSet kept;
  int codim() const { return kept.ambient() - kept.size(); }
};

class RationalPolytope {
 public:
  static RationalPolytope empty(int dim);
  static RationalPolytope from_points(int dim, std::vector<RatVec> points);
  /// Bounded region {x : normal.x <= offset}. Empty input region gives the
  /// empty polytope; an unbounded region is a precondition error.
  static RationalPolytope from_halfspaces(
      int dim, const std::vector<std::pair<RatVec, Rat>>& halfspaces);

  int dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }

  /// Facet list; requires a full-dimensional body.
  const std::vector<Facet>& facets() const;

  bool contains(const RatVec& x) const;  // boundary counts as inside
  Rat volume() const;                    // 0 unless full-dimensional
  bool is_symmetric() const;             // vertex set closed under negation

  /// True when 0 is strictly interior. On failure *violation (if given)
  /// receives a separating facet normal, or zeros for degenerate bodies.
  bool origin_interior(RatVec* violation = nullptr) const;

  std::pair<RatVec, RatVec> bounding_box() const;  // per-coordinate min/max

  RationalPolytope project_onto(const IndexSet& coords) const;  // in R^{|I|}
  RationalPolytope section(const IndexSet& kept) const;         // in R^{|kept|}
  RationalPolytope section(const CoordSubspace& e) const { return section(e.kept); }
  RationalPolytope polar() const;  // requires 0 strictly interior
  RationalPolytope translate(const RatVec& v) const;
  RationalPolytope scale(const Rat& s) const;  // s > 0

 private:
  RationalPolytope() = default;

  // Derived data is memoized in a box shared by all copies of the value
  // (identical geometry); fresh values get a fresh box.
  struct DerivedCache {
    std::recursive_mutex mu;
    std::optional<std::vector<Facet>> facets;
    std::optional<Rat> volume;
    std::map<IndexSet, std::shared_ptr<const RationalPolytope>> sections;
    std::map<IndexSet, std::shared_ptr<const RationalPolytope>> projections;
  };

  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RatVec> vertices_;
  std::shared_ptr<DerivedCache> cache_ = std::make_shared<DerivedCache>();
};

RationalPolytope hull_of_union(const RationalPolytope& a, const RationalPolytope& b);
RationalPolytope intersection(const RationalPolytope& a, const RationalPolytope& b);

/// Simplices (as vertex-index tuples) of a triangulation of a full-dimensional
/// polytope given by its extreme points.
std::vector<std::vector<int>> triangulate(const std::vector<RatVec>& points, int dim);

}  // namespace latcell

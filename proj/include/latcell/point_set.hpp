// Exact combinatorics of finite subsets of Z^n: coordinate projections,
// coordinate convex hulls, integer boxes and cells, cell/box content, and the
// discrete dimensions (VC, Natarajan, shattering).
#pragma once

#include <optional>
#include <vector>

#include "latcell/index_set.hpp"
#include "latcell/rational.hpp"

namespace latcell {

/// Finite subset of Z^n. Points are stored sorted (lex) and deduplicated.
class IntegerPointSet {
 public:
  explicit IntegerPointSet(int dim) : dim_(dim) {
    if (dim <= 0) throw input_error("IntegerPointSet: dimension must be positive");
  }
  // reject_duplicates: raise input_error naming the offending index instead of
  // silently merging (used by the file loader).
  IntegerPointSet(int dim, std::vector<IntVec> points, bool reject_duplicates = false);

  int dim() const { return dim_; }
  const std::vector<IntVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const IntVec& p) const;

 private:
  int dim_;
  std::vector<IntVec> points_;
};

struct IntegerBox {
  IndexSet over;
  IntVec lo, hi;  // lo(i) < hi(i) for all i, aligned with over.indices()
};

/// A choice of signs over an index set, the quantifier of the coordinate
/// convex hull condition.
struct SignPattern {
  IndexSet over;
  std::vector<int> signs;  // +1 / -1, aligned with over.indices()

  static std::vector<SignPattern> all(const IndexSet& over);
  /// y dominates x in this pattern: y_i >= x_i where +1, y_i <= x_i where -1.
  bool dominates(const IntVec& y, const IntVec& x) const;
};

struct IntegerCell {
  IndexSet over;
  IntVec base;  // the cell is prod_{i in over} {base_i, base_i + 1}
};

struct ShatterWitness {
  IndexSet indices;
  RatVec level;  // h, aligned with indices
  Rat scale;     // t
};

struct ShatterResult {
  int dimension = 0;
  std::optional<ShatterWitness> witness;
};

IntegerPointSet project(const IntegerPointSet& a, const IndexSet& i);
IntegerPointSet slice(const IntegerPointSet& a, int coord, const Int& value);
IntegerPointSet translate(const IntegerPointSet& a, const IntVec& v);
IntegerPointSet permute_coords(const IntegerPointSet& a, const std::vector<int>& perm);

/// Coordinate convex hull membership test, the direct sign-pattern loop:
/// for every theta in {-1,+1}^n some y in A dominates x in the theta sense.
bool cconv_contains(const IntegerPointSet& a, const IntVec& x);

/// All integer cells whose 2^|I| corners lie in cconv(project(a, i)).
std::vector<IntegerCell> integer_cells_in_cconv(const IntegerPointSet& a, const IndexSet& i);

/// Number of integer boxes with all corners in project(a, i) itself (no hull).
long long integer_boxes_in(const IntegerPointSet& a, const IndexSet& i);

/// The boxes themselves, in (lo, hi) lexicographic order.
std::vector<IntegerBox> integer_boxes_list(const IntegerPointSet& a, const IndexSet& i);

/// Sum of cell counts over all nonempty projections, plus the 0-dimensional
/// term (1 when the set is nonempty).
long long cell_content(const IntegerPointSet& a);

/// Sum of box counts over all nonempty projections (no trivial term).
long long box_content(const IntegerPointSet& a);

/// VC dimension of a Boolean set: largest |I| with project(a, I) = {0,1}^I.
int vc_dimension(const IntegerPointSet& a);

/// Largest |I| such that project(a, I) contains an integer box.
int natarajan_dimension(const IntegerPointSet& a);

/// Scale-sensitive shattering dimension v(a, t) with a witness when positive.
/// The level search runs over the per-coordinate grid of attained values and
/// attained values minus t.
ShatterResult shattering_dimension_discrete(const IntegerPointSet& a, const Rat& t);

}  // namespace latcell

// Coordinate index sets: nonempty subsets of {1..n} identifying a coordinate
// projection or subspace. The empty "trivial" marker is legal only where the
// 0-dimensional projection convention applies (cell content).
#pragma once

#include <string>
#include <vector>

#include "latcell/rational.hpp"

namespace latcell {

class IndexSet {
 public:
  // Validates range/duplicates; indices are 1-based and stored sorted.
  IndexSet(int ambient, std::vector<int> indices);

  static IndexSet trivial(int ambient);
  static IndexSet full(int ambient);

  int ambient() const { return ambient_; }
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool is_trivial() const { return indices_.empty(); }
  int codim() const { return ambient_ - size(); }
  bool contains(int i) const;

  // Canonical enumeration order: cardinality first, then lexicographic.
  static std::vector<IndexSet> all_nonempty(int ambient);
  static std::vector<IndexSet> of_size(int ambient, int k);

  bool operator==(const IndexSet& o) const {
    return ambient_ == o.ambient_ && indices_ == o.indices_;
  }
  // Cardinality-then-lex; the tie-break order used for witnesses.
  bool operator<(const IndexSet& o) const;

  std::string to_string() const;  // e.g. "{1,3}"

 private:
  IndexSet() = default;
  int ambient_ = 0;
  std::vector<int> indices_;
};

}  // namespace latcell

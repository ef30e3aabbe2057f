#include "latcell/index_set.hpp"

#include <algorithm>

namespace latcell {

IndexSet::IndexSet(int ambient, std::vector<int> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  if (ambient_ <= 0) throw input_error("IndexSet: ambient dimension must be positive");
  if (indices_.empty())
    throw input_error("IndexSet: empty index set (use IndexSet::trivial)");
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > ambient_)
      throw input_error("IndexSet: index out of range 1.." + std::to_string(ambient_));
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw input_error("IndexSet: duplicate index " + std::to_string(indices_[i]));
  }
}

IndexSet IndexSet::trivial(int ambient) {
  IndexSet s;
  s.ambient_ = ambient;
  return s;
}

IndexSet IndexSet::full(int ambient) {
  std::vector<int> idx(ambient);
  for (int i = 0; i < ambient; ++i) idx[i] = i + 1;
  return IndexSet(ambient, std::move(idx));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::vector<IndexSet> IndexSet::of_size(int ambient, int k) {
  std::vector<IndexSet> out;
  if (k <= 0 || k > ambient) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  for (;;) {
    out.emplace_back(IndexSet(ambient, idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == ambient - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> IndexSet::all_nonempty(int ambient) {
  if (ambient > 24) throw input_error("IndexSet enumeration: ambient too large");
  std::vector<IndexSet> out;
  for (int k = 1; k <= ambient; ++k) {
    auto part = of_size(ambient, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool IndexSet::operator<(const IndexSet& o) const {
  if (indices_.size() != o.indices_.size())
    return indices_.size() < o.indices_.size();
  return indices_ < o.indices_;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(indices_[i]);
  }
  return s + "}";
}

}  // namespace latcell

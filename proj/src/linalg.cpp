#include "latcell/linalg.hpp"

namespace latcell {

namespace {

// Forward elimination; returns the pivot column per eliminated row.
std::vector<int> eliminate(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(eliminate(m).size()); }

Rat det(RatMatrix m) {
  const std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[col], m[sel]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

std::optional<RatVec> solve_square(RatMatrix a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(a[col], a[sel]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

int affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return diffs.empty() ? 0 : rank(std::move(diffs));
}

std::vector<int> affine_pivot_coords(const std::vector<RatVec>& points) {
  if (points.size() <= 1) return {};
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  // Pivot columns of the difference matrix: eliminate on the transpose-free
  // form by tracking columns directly.
  RatMatrix m = diffs;
  return eliminate(m);
}

}  // namespace latcell

#include "latcell/point_set.hpp"

#include <algorithm>
#include <map>

namespace latcell {

namespace {

constexpr long long kGridCap = 1LL << 22;

void check_index_set(const IntegerPointSet& a, const IndexSet& i) {
  if (i.ambient() != a.dim())
    throw input_error("index set ambient " + std::to_string(i.ambient()) +
                      " does not match set dimension " + std::to_string(a.dim()));
  if (i.is_trivial()) throw input_error("operation requires a nonempty index set");
}

// Dense {0,1} mask over an integer box grid, used for the coordinate convex
// hull sweep. Coordinates are offsets from the per-coordinate minimum.
struct Grid {
  std::vector<long long> extent;  // per coordinate
  std::vector<long long> stride;
  long long total = 1;

  explicit Grid(const std::vector<long long>& ext) : extent(ext) {
    stride.resize(ext.size());
    for (std::size_t c = 0; c < ext.size(); ++c) {
      stride[c] = total;
      total *= ext[c];
      if (total > kGridCap)
        throw precondition_error("coordinate range too large for cell enumeration");
    }
  }
  long long index(const std::vector<long long>& x) const {
    long long id = 0;
    for (std::size_t c = 0; c < x.size(); ++c) id += stride[c] * x[c];
    return id;
  }
};

// Small bitset over point indices.
class PointMask {
 public:
  explicit PointMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
  PointMask& operator&=(const PointMask& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

IntegerPointSet::IntegerPointSet(int dim, std::vector<IntVec> points,
                                 bool reject_duplicates)
    : dim_(dim), points_(std::move(points)) {
  if (dim <= 0) throw input_error("IntegerPointSet: dimension must be positive");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != dim_)
      throw input_error("point length does not match dimension " + std::to_string(dim_));
  }
  if (reject_duplicates) {
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw input_error("duplicate point at index " + std::to_string(j));
  }
  std::sort(points_.begin(), points_.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool IntegerPointSet::contains(const IntVec& p) const {
  return std::binary_search(points_.begin(), points_.end(), p,
                            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
}

IntegerPointSet project(const IntegerPointSet& a, const IndexSet& i) {
  check_index_set(a, i);
  std::vector<IntVec> out;
  out.reserve(a.size());
  for (const auto& p : a.points()) {
    IntVec q(i.size());
    for (int c = 0; c < i.size(); ++c) q[c] = p[i.indices()[c] - 1];
    out.push_back(std::move(q));
  }
  return IntegerPointSet(i.size(), std::move(out));
}

IntegerPointSet slice(const IntegerPointSet& a, int coord, const Int& value) {
  if (coord < 1 || coord > a.dim())
    throw input_error("slice coordinate out of range");
  std::vector<IntVec> out;
  for (const auto& p : a.points())
    if (p[coord - 1] == value) out.push_back(p);
  return IntegerPointSet(a.dim(), std::move(out));
}

IntegerPointSet translate(const IntegerPointSet& a, const IntVec& v) {
  if (static_cast<int>(v.size()) != a.dim())
    throw input_error("translation vector length mismatch");
  std::vector<IntVec> out;
  out.reserve(a.size());
  for (const auto& p : a.points()) {
    IntVec q(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) q[c] = p[c] + v[c];
    out.push_back(std::move(q));
  }
  return IntegerPointSet(a.dim(), std::move(out));
}

IntegerPointSet permute_coords(const IntegerPointSet& a, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.dim())
    throw input_error("permutation length mismatch");
  std::vector<IntVec> out;
  out.reserve(a.size());
  for (const auto& p : a.points()) {
    IntVec q(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) q[c] = p[perm[c] - 1];
    out.push_back(std::move(q));
  }
  return IntegerPointSet(a.dim(), std::move(out));
}

std::vector<SignPattern> SignPattern::all(const IndexSet& over) {
  const int d = over.size();
  if (d > 24) throw precondition_error("sign pattern enumeration: index set too large");
  std::vector<SignPattern> out;
  out.reserve(1u << d);
  for (std::uint32_t theta = 0; theta < (1u << d); ++theta) {
    SignPattern p{over, std::vector<int>(d)};
    for (int i = 0; i < d; ++i) p.signs[i] = (theta & (1u << i)) ? 1 : -1;
    out.push_back(std::move(p));
  }
  return out;
}

bool SignPattern::dominates(const IntVec& y, const IntVec& x) const {
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const Int& yc = y[over.indices()[i] - 1];
    const Int& xc = x[over.indices()[i] - 1];
    if (signs[i] > 0 ? yc < xc : yc > xc) return false;
  }
  return true;
}

bool cconv_contains(const IntegerPointSet& a, const IntVec& x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw input_error("cconv_contains: point length mismatch");
  for (const auto& pattern : SignPattern::all(IndexSet::full(a.dim()))) {
    bool dominated = false;
    for (const auto& y : a.points()) {
      if (pattern.dominates(y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

std::vector<IntegerCell> integer_cells_in_cconv(const IntegerPointSet& a, const IndexSet& i) {
  check_index_set(a, i);
  std::vector<IntegerCell> cells;
  IntegerPointSet s = project(a, i);
  if (s.empty()) return cells;
  const int d = i.size();

  IntVec mins(d), maxs(d);
  for (int c = 0; c < d; ++c) mins[c] = maxs[c] = s.points()[0][c];
  for (const auto& p : s.points())
    for (int c = 0; c < d; ++c) {
      mins[c] = std::min(mins[c], p[c]);
      maxs[c] = std::max(maxs[c], p[c]);
    }
  std::vector<long long> ext(d);
  for (int c = 0; c < d; ++c) {
    ext[c] = (maxs[c] - mins[c] + 1).convert_to<long long>();
    if (ext[c] < 2) return cells;  // no room for a cell in this coordinate
  }
  Grid grid(ext);

  std::vector<char> member(grid.total, 0);
  for (const auto& p : s.points()) {
    std::vector<long long> off(d);
    for (int c = 0; c < d; ++c) off[c] = (p[c] - mins[c]).convert_to<long long>();
    member[grid.index(off)] = 1;
  }

  // For each sign pattern theta, mark points dominated by some set point in
  // the theta directions (a suffix-OR sweep), then intersect over patterns.
  std::vector<char> hull(grid.total, 1);
  std::vector<char> mask(grid.total);
  std::vector<long long> t(d), x(d);
  for (std::uint32_t theta = 0; theta < (1u << d); ++theta) {
    mask = member;
    // Iterate offsets x in an order where the dominating neighbour in each
    // direction was already processed: descending for +1 coords, ascending
    // for -1 coords.
    std::fill(t.begin(), t.end(), 0);
    for (;;) {
      long long id = 0;
      for (int c = 0; c < d; ++c) {
        x[c] = (theta & (1u << c)) ? ext[c] - 1 - t[c] : t[c];
        id += grid.stride[c] * x[c];
      }
      if (!mask[id]) {
        for (int c = 0; c < d && !mask[id]; ++c) {
          long long step = (theta & (1u << c)) ? 1 : -1;
          long long nb = x[c] + step;
          if (nb >= 0 && nb < ext[c]) mask[id] |= mask[id + step * grid.stride[c]];
        }
      }
      int c = 0;
      while (c < d && ++t[c] == ext[c]) t[c++] = 0;
      if (c == d) break;
    }
    for (long long id = 0; id < grid.total; ++id) hull[id] &= mask[id];
  }

  // Cells: bases whose 2^d corners are all in the hull mask.
  std::vector<long long> base(d, 0);
  for (;;) {
    bool ok = true;
    for (std::uint32_t corner = 0; corner < (1u << d) && ok; ++corner) {
      long long id = 0;
      for (int c = 0; c < d; ++c)
        id += grid.stride[c] * (base[c] + ((corner >> c) & 1));
      ok = hull[id];
    }
    if (ok) {
      IntVec b(d);
      for (int c = 0; c < d; ++c) b[c] = mins[c] + base[c];
      cells.push_back(IntegerCell{i, std::move(b)});
    }
    int c = 0;
    while (c < d && ++base[c] == ext[c] - 1) base[c++] = 0;
    if (c == d) break;
  }
  return cells;
}

namespace {

using SmallVec = std::vector<long long>;

std::vector<SmallVec> to_small(const std::vector<IntVec>& pts) {
  std::vector<SmallVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    SmallVec q(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (abs(p[c]) > Int(1) << 60)
        throw precondition_error("coordinate magnitude too large for box enumeration");
      q[c] = p[c].convert_to<long long>();
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of integer boxes in a set of points given as sorted vectors,
// recursing over coordinates: choose the two levels of the first coordinate,
// intersect the corresponding fibers, recurse on the rest.
long long count_boxes_rec(const std::vector<SmallVec>& pts, int d) {
  if (d == 0) return 1;
  std::map<long long, std::vector<SmallVec>> fibers;
  for (const auto& p : pts) fibers[p[0]].emplace_back(p.begin() + 1, p.end());
  long long total = 0;
  for (auto it1 = fibers.begin(); it1 != fibers.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != fibers.end(); ++it2) {
      std::vector<SmallVec> common;
      std::set_intersection(it1->second.begin(), it1->second.end(),
                            it2->second.begin(), it2->second.end(),
                            std::back_inserter(common));
      if (!common.empty()) total += count_boxes_rec(common, d - 1);
    }
  }
  return total;
}

}  // namespace

long long integer_boxes_in(const IntegerPointSet& a, const IndexSet& i) {
  check_index_set(a, i);
  IntegerPointSet s = project(a, i);
  return count_boxes_rec(to_small(s.points()), i.size());
}

std::vector<IntegerBox> integer_boxes_list(const IntegerPointSet& a, const IndexSet& i) {
  check_index_set(a, i);
  IntegerPointSet s = project(a, i);
  const int d = i.size();
  std::vector<IntegerBox> out;
  if (s.empty()) return out;

  // Candidate level pairs per coordinate from the attained values.
  std::vector<std::vector<Int>> values(d);
  for (int c = 0; c < d; ++c) {
    std::vector<Int> v;
    for (const auto& p : s.points()) v.push_back(p[c]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() < 2) return out;
    values[c] = std::move(v);
  }
  std::vector<std::size_t> lo_pick(d, 0), hi_pick(d, 1);
  for (;;) {
    bool all_corners = true;
    for (std::uint32_t corner = 0; corner < (1u << d) && all_corners; ++corner) {
      IntVec x(d);
      for (int c = 0; c < d; ++c)
        x[c] = values[c][(corner >> c) & 1 ? hi_pick[c] : lo_pick[c]];
      all_corners = s.contains(x);
    }
    if (all_corners) {
      IntegerBox box{i, IntVec(d), IntVec(d)};
      for (int c = 0; c < d; ++c) {
        box.lo[c] = values[c][lo_pick[c]];
        box.hi[c] = values[c][hi_pick[c]];
      }
      out.push_back(std::move(box));
    }
    // Advance the (lo < hi) pair odometer.
    int c = 0;
    for (; c < d; ++c) {
      if (++hi_pick[c] < values[c].size()) break;
      if (++lo_pick[c] + 1 < values[c].size()) {
        hi_pick[c] = lo_pick[c] + 1;
        break;
      }
      lo_pick[c] = 0;
      hi_pick[c] = 1;
    }
    if (c == d) break;
  }
  std::sort(out.begin(), out.end(), [](const IntegerBox& a, const IntegerBox& b) {
    if (a.lo != b.lo) return lex_less(a.lo, b.lo);
    return lex_less(a.hi, b.hi);
  });
  return out;
}

long long cell_content(const IntegerPointSet& a) {
  if (a.empty()) return 0;
  long long total = 1;  // the 0-dimensional projection term
  for (const auto& i : IndexSet::all_nonempty(a.dim()))
    total += static_cast<long long>(integer_cells_in_cconv(a, i).size());
  return total;
}

long long box_content(const IntegerPointSet& a) {
  if (a.empty()) return 0;
  long long total = 0;
  for (const auto& i : IndexSet::all_nonempty(a.dim()))
    total += integer_boxes_in(a, i);
  return total;
}

int vc_dimension(const IntegerPointSet& a) {
  for (const auto& p : a.points())
    for (const auto& c : p)
      if (c != 0 && c != 1)
        throw input_error("vc_dimension requires a Boolean point set");
  if (a.size() <= 1) return 0;
  const int n = a.dim();
  if (n > 20) throw input_error("vc_dimension: dimension too large");
  for (int k = std::min<int>(n, 20); k >= 1; --k) {
    for (const auto& i : IndexSet::of_size(n, k)) {
      std::vector<char> seen(1u << k, 0);
      std::uint32_t distinct = 0;
      for (const auto& p : a.points()) {
        std::uint32_t pat = 0;
        for (int c = 0; c < k; ++c)
          if (p[i.indices()[c] - 1] == 1) pat |= (1u << c);
        if (!seen[pat]) {
          seen[pat] = 1;
          ++distinct;
        }
      }
      if (distinct == (1u << k)) return k;
    }
  }
  return 0;
}

namespace {

bool has_box_rec(const std::vector<SmallVec>& pts, int d) {
  if (d == 0) return true;
  std::map<long long, std::vector<SmallVec>> fibers;
  for (const auto& p : pts) fibers[p[0]].emplace_back(p.begin() + 1, p.end());
  for (auto it1 = fibers.begin(); it1 != fibers.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != fibers.end(); ++it2) {
      std::vector<SmallVec> common;
      std::set_intersection(it1->second.begin(), it1->second.end(),
                            it2->second.begin(), it2->second.end(),
                            std::back_inserter(common));
      if (!common.empty() && has_box_rec(common, d - 1)) return true;
    }
  return false;
}

}  // namespace

int natarajan_dimension(const IntegerPointSet& a) {
  if (a.size() <= 1) return 0;
  const int n = a.dim();
  for (int k = n; k >= 1; --k)
    for (const auto& i : IndexSet::of_size(n, k))
      if (has_box_rec(to_small(project(a, i).points()), k)) return k;
  return 0;
}

namespace {

// Is some level vector h over the candidate grid a t-shattering witness for
// the index set? Candidates per coordinate: attained values and attained
// values minus t, pre-filtered so both threshold sides are populated.
std::optional<RatVec> find_shatter_level(const IntegerPointSet& s, const Rat& t) {
  const int d = s.dim();
  const std::size_t m = s.size();
  std::vector<std::vector<Rat>> cand(d);
  for (int c = 0; c < d; ++c) {
    std::vector<Rat> v;
    for (const auto& p : s.points()) {
      v.push_back(Rat(p[c]));
      v.push_back(Rat(p[c]) - t);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    cand[c] = std::move(v);
  }

  // Per coordinate and candidate level: bitmasks of points on each side.
  std::vector<std::vector<PointMask>> le(d), ge(d);
  for (int c = 0; c < d; ++c) {
    std::vector<Rat> kept;
    for (const Rat& h : cand[c]) {
      PointMask ml(m), mg(m);
      bool any_le = false, any_ge = false;
      for (std::size_t pi = 0; pi < m; ++pi) {
        Rat x(s.points()[pi][c]);
        if (x <= h) {
          ml.set(pi);
          any_le = true;
        }
        if (x >= h + t) {
          mg.set(pi);
          any_ge = true;
        }
      }
      if (any_le && any_ge) {
        le[c].push_back(ml);
        ge[c].push_back(mg);
        kept.push_back(h);
      }
    }
    if (kept.empty()) return std::nullopt;
    cand[c] = std::move(kept);
  }

  std::vector<std::size_t> pick(d, 0);
  for (;;) {
    bool all_partitions = true;
    for (std::uint32_t part = 0; part < (1u << d) && all_partitions; ++part) {
      PointMask inter = (part & 1u) ? ge[0][pick[0]] : le[0][pick[0]];
      for (int c = 1; c < d; ++c)
        inter &= (part & (1u << c)) ? ge[c][pick[c]] : le[c][pick[c]];
      all_partitions = inter.any();
    }
    if (all_partitions) {
      RatVec h(d);
      for (int c = 0; c < d; ++c) h[c] = cand[c][pick[c]];
      return h;
    }
    int c = 0;
    while (c < d && ++pick[c] == cand[c].size()) pick[c++] = 0;
    if (c == d) break;
  }
  return std::nullopt;
}

}  // namespace

ShatterResult shattering_dimension_discrete(const IntegerPointSet& a, const Rat& t) {
  if (t <= 0) throw input_error("shattering scale t must be positive");
  ShatterResult res;
  if (a.empty()) return res;
  const int n = a.dim();
  for (int k = n; k >= 1; --k) {
    for (const auto& i : IndexSet::of_size(n, k)) {
      auto h = find_shatter_level(project(a, i), t);
      if (h) {
        res.dimension = k;
        res.witness = ShatterWitness{i, std::move(*h), t};
        return res;
      }
    }
  }
  return res;
}

}  // namespace latcell

#include "latcell/body_cells.hpp"

#include <algorithm>

#include "latcell/lp.hpp"

namespace latcell {

namespace {

constexpr long long kBaseCap = 1LL << 24;

// Lattice points x with A x <= b, enumerated over an integer box with
// incremental constraint evaluation. T is the dot-product scalar (long long
// fast path, Int fallback).
template <typename T>
void enumerate_lattice(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                       const std::vector<long long>& lo, const std::vector<long long>& hi,
                       std::vector<std::vector<long long>>& out) {
  const std::size_t d = lo.size();
  const std::size_t m = a.size();
  std::vector<long long> x(lo);
  std::vector<T> dots(m);
  for (std::size_t f = 0; f < m; ++f) {
    T s = 0;
    for (std::size_t c = 0; c < d; ++c) s += a[f][c] * T(x[c]);
    dots[f] = s;
  }
  for (;;) {
    bool inside = true;
    for (std::size_t f = 0; f < m && inside; ++f) inside = dots[f] <= b[f];
    if (inside) out.push_back(x);
    std::size_t c = 0;
    for (; c < d; ++c) {
      if (x[c] < hi[c]) {
        ++x[c];
        for (std::size_t f = 0; f < m; ++f) dots[f] += a[f][c];
        break;
      }
      for (std::size_t f = 0; f < m; ++f) dots[f] -= a[f][c] * T(x[c] - lo[c]);
      x[c] = lo[c];
    }
    if (c == d) break;
  }
}

}  // namespace

std::vector<IntVec> lattice_cell_bases(const RationalPolytope& body) {
  std::vector<IntVec> bases;
  if (body.is_empty() || !body.full_dimensional()) return bases;
  const int d = body.dim();
  const auto& facets = body.facets();

  // Cube [x, x+1] fits iff x satisfies the eroded system: the worst corner of
  // each facet contributes the positive part of its normal.
  std::vector<IntVec> anorm(facets.size());
  IntVec aoff(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    anorm[f] = facets[f].normal;
    Int shrink = 0;
    for (const Int& c : facets[f].normal)
      if (c > 0) shrink += c;
    aoff[f] = facets[f].offset - shrink;
  }

  auto [blo, bhi] = body.bounding_box();
  std::vector<long long> lo(d), hi(d);
  long long total = 1;
  for (int c = 0; c < d; ++c) {
    Int l = ceil_rat(blo[c]);
    Int h = floor_rat(bhi[c] - 1);
    if (h < l) return bases;
    lo[c] = l.convert_to<long long>();
    hi[c] = h.convert_to<long long>();
    total *= hi[c] - lo[c] + 1;
    if (total > kBaseCap)
      throw precondition_error("cell enumeration box too large");
  }

  // Fast path when every partial dot product fits comfortably in 64 bits.
  bool fits = true;
  for (std::size_t f = 0; f < facets.size() && fits; ++f) {
    Int bound = abs(aoff[f]);
    for (int c = 0; c < d; ++c)
      bound += abs(anorm[f][c]) * Int(std::max(std::abs(lo[c]), std::abs(hi[c])) + 1);
    fits = bound < (Int(1) << 62);
  }

  std::vector<std::vector<long long>> found;
  if (fits) {
    std::vector<std::vector<long long>> a(facets.size(), std::vector<long long>(d));
    std::vector<long long> b(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      for (int c = 0; c < d; ++c) a[f][c] = anorm[f][c].convert_to<long long>();
      b[f] = aoff[f].convert_to<long long>();
    }
    enumerate_lattice<long long>(a, b, lo, hi, found);
  } else {
    std::vector<std::vector<Int>> a(facets.size(), std::vector<Int>(d));
    for (std::size_t f = 0; f < facets.size(); ++f)
      for (int c = 0; c < d; ++c) a[f][c] = anorm[f][c];
    std::vector<Int> b(aoff.begin(), aoff.end());
    enumerate_lattice<Int>(a, b, lo, hi, found);
  }

  bases.reserve(found.size());
  for (const auto& x : found) {
    IntVec v(d);
    for (int c = 0; c < d; ++c) v[c] = x[c];
    bases.push_back(std::move(v));
  }
  return bases;
}

std::vector<IntegerCell> count_integer_cells_body(const RationalPolytope& body,
                                                  const IndexSet& coords) {
  if (coords.is_trivial()) throw input_error("cell counting needs a nonempty index set");
  RationalPolytope proj = body.project_onto(coords);
  std::vector<IntegerCell> cells;
  for (auto& base : lattice_cell_bases(proj))
    cells.push_back(IntegerCell{coords, std::move(base)});
  return cells;
}

BestProjection best_cell_projection(const RationalPolytope& body) {
  BestProjection best{IndexSet::full(body.dim()), -1, Rat(0), Rat(0)};
  for (const auto& coords : IndexSet::all_nonempty(body.dim())) {
    RationalPolytope proj = body.project_onto(coords);
    long long n = static_cast<long long>(lattice_cell_bases(proj).size());
    if (n > best.cells) {
      best.coords = coords;
      best.cells = n;
    }
  }
  const int n = body.dim();
  Rat six = 1, four = 1, two = 1;
  for (int i = 0; i < n; ++i) {
    six *= 6;
    four *= 4;
    two *= 2;
  }
  const Rat vol = body.volume();
  best.sixth_volume = vol / six;
  best.quarter_bound = vol / four - 1 / two;
  return best;
}

CubePlacement max_cube_side(const RationalPolytope& body, const IndexSet& coords) {
  if (coords.is_trivial()) throw input_error("cube fitting needs a nonempty index set");
  RationalPolytope proj = body.project_onto(coords);
  const int d = coords.size();
  if (proj.is_empty()) throw precondition_error("cube fitting in an empty body");
  if (!proj.full_dimensional()) return CubePlacement{Rat(0), proj.vertices()[0]};

  // Variables (h, t): maximize t subject to, per facet a.x <= b,
  // a.h + t * sum_i max(a_i, 0) <= b.
  RatMatrix rows;
  RatVec rhs;
  for (const auto& f : proj.facets()) {
    RatVec row(d + 1);
    Rat pos = 0;
    for (int c = 0; c < d; ++c) {
      row[c] = Rat(f.normal[c]);
      if (f.normal[c] > 0) pos += Rat(f.normal[c]);
    }
    row[d] = pos;
    rows.push_back(std::move(row));
    rhs.push_back(Rat(f.offset));
  }
  // t >= 0
  RatVec tnn(d + 1, Rat(0));
  tnn[d] = -1;
  rows.push_back(std::move(tnn));
  rhs.push_back(Rat(0));

  RatVec obj(d + 1, Rat(0));
  obj[d] = 1;
  LpSolution sol = simplex_max_free(rows, rhs, obj);
  if (sol.status != LpStatus::Optimal)
    throw precondition_error("cube-fitting LP did not reach an optimum");
  CubePlacement out;
  out.side = sol.objective;
  out.corner.assign(sol.x.begin(), sol.x.begin() + d);
  return out;
}

int comb_dimension_body(const RationalPolytope& body, const Rat& t) {
  if (t <= 0) throw input_error("cube side t must be positive");
  if (body.is_empty()) return 0;
  for (int k = body.dim(); k >= 1; --k)
    for (const auto& coords : IndexSet::of_size(body.dim(), k))
      if (max_cube_side(body, coords).side >= t) return k;
  return 0;
}

CubeSideProfile cube_side_profile(const RationalPolytope& body) {
  CubeSideProfile prof;
  prof.max_by_rank.assign(body.dim(), Rat(0));
  for (const auto& coords : IndexSet::all_nonempty(body.dim())) {
    Rat s = max_cube_side(body, coords).side;
    prof.max_by_rank[coords.size() - 1] = std::max(prof.max_by_rank[coords.size() - 1], s);
    prof.side.emplace(coords, std::move(s));
  }
  return prof;
}

}  // namespace latcell

#include "latcell/oracles.hpp"

#include <cmath>
#include <random>

namespace latcell {

namespace {

// Self-contained phase-1 simplex for the convex combination system
//   sum lambda_i v_i = x, sum lambda_i = 1, lambda >= 0.
// Instantiated with exact rationals (eps = 0) and with doubles for the Monte
// Carlo sampler. Deliberately independent of the main LP implementation.
template <typename T>
bool hull_feasible(const std::vector<std::vector<T>>& points, const std::vector<T>& x,
                   const T& eps) {
  const std::size_t m = points.size();
  if (m == 0) return false;
  const std::size_t d = x.size();
  const std::size_t rows = d + 1;

  // Tableau: rows x (m columns + rhs); basis starts as one artificial per row.
  std::vector<std::vector<T>> t(rows, std::vector<T>(m + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < m; ++j) t[r][j] = points[j][r];
    t[r][m] = x[r];
  }
  for (std::size_t j = 0; j < m; ++j) t[d][j] = T(1);
  t[d][m] = T(1);
  for (std::size_t r = 0; r < rows; ++r) {
    if (t[r][m] < T(0))
      for (std::size_t j = 0; j <= m; ++j) t[r][j] = -t[r][j];
  }

  // Objective row: minimize the artificial total, i.e. maximize the column
  // sums of the real variables.
  std::vector<T> obj(m + 1, T(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j <= m; ++j) obj[j] += t[r][j];

  std::vector<long long> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = static_cast<long long>(m + r);

  // Pivot cap guards the floating-point instantiation; the exact one uses
  // Bland's rule and terminates on its own.
  for (long long pivots = 0; pivots < 100000; ++pivots) {
    // Bland: smallest-index entering column with positive reduced cost.
    std::size_t enter = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (obj[j] > eps) {
        enter = j;
        break;
      }
    }
    if (enter == m) break;
    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= eps) continue;
      if (leave == rows) {
        leave = r;
        continue;
      }
      const T lhs = t[r][m] * t[leave][enter];
      const T rhs = t[leave][m] * t[r][enter];
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[leave])) leave = r;
    }
    if (leave == rows) break;  // unbounded phase-1 cannot happen; bail out
    const T pivot = t[leave][enter];
    for (std::size_t j = 0; j <= m; ++j) t[leave][j] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const T f = t[r][enter];
      if (f == T(0)) continue;
      for (std::size_t j = 0; j <= m; ++j) t[r][j] -= f * t[leave][j];
    }
    const T fo = obj[enter];
    if (fo != T(0))
      for (std::size_t j = 0; j <= m; ++j) obj[j] -= fo * t[leave][j];
    basis[leave] = static_cast<long long>(enter);
  }

  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= static_cast<long long>(m)) {
      T v = t[r][m];
      if (v < T(0)) v = -v;
      if (v > eps) return false;
    }
  }
  return true;
}

bool oracle_contains_exact(const std::vector<RatVec>& vertices, const RatVec& x) {
  std::vector<std::vector<Rat>> pts(vertices.begin(), vertices.end());
  return hull_feasible<Rat>(pts, x, Rat(0));
}

std::uint64_t mix_seed(std::uint64_t seed) {
  // splitmix step so shards with consecutive seeds decorrelate
  seed += 0x9E3779B97F4A7C15ULL;
  seed = (seed ^ (seed >> 30)) * 0xBF58476D1CE4E5B9ULL;
  seed = (seed ^ (seed >> 27)) * 0x94D049BB133111EBULL;
  return seed ^ (seed >> 31);
}

McEstimate mc_box_hit_rate(const std::function<bool(const std::vector<double>&)>& member,
                           const std::vector<double>& lo, const std::vector<double>& hi,
                           const ConstantsConfig& cfg) {
  const std::size_t n = lo.size();
  double box_volume = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (hi[c] <= lo[c]) throw input_error("mc_volume: empty bounding box");
    box_volume *= hi[c] - lo[c];
  }
  std::mt19937_64 rng(mix_seed(cfg.mc_seed));
  std::vector<double> x(n);
  long long hits = 0;
  for (long long s = 0; s < cfg.mc_samples; ++s) {
    for (std::size_t c = 0; c < n; ++c) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      x[c] = lo[c] + u * (hi[c] - lo[c]);
    }
    if (member(x)) ++hits;
  }
  McEstimate est;
  est.samples = cfg.mc_samples;
  est.seed = cfg.mc_seed;
  const double rate = static_cast<double>(hits) / static_cast<double>(cfg.mc_samples);
  est.value = rate * box_volume;
  if (hits == 0) {
    est.zero_hits = true;
    est.half_width_95 = box_volume * 3.0 / static_cast<double>(cfg.mc_samples);
  } else {
    est.half_width_95 = 1.96 * box_volume *
                        std::sqrt(rate * (1.0 - rate) / static_cast<double>(cfg.mc_samples));
  }
  return est;
}

}  // namespace

bool oracle_cconv(const IntegerPointSet& a, const IntVec& x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw input_error("oracle_cconv: point length mismatch");
  const int n = a.dim();
  std::vector<int> theta(n, -1);
  for (;;) {
    bool found = false;
    for (const auto& y : a.points()) {
      bool dominates = true;
      for (int i = 0; i < n; ++i) {
        if (theta[i] == 1 && !(y[i] >= x[i])) dominates = false;
        if (theta[i] == -1 && !(y[i] <= x[i])) dominates = false;
      }
      if (dominates) {
        found = true;
        break;
      }
    }
    if (!found) return false;
    int i = 0;
    while (i < n && theta[i] == 1) theta[i++] = -1;
    if (i == n) break;
    theta[i] = 1;
  }
  return true;
}

int grid_shatter_search(const IntegerPointSet& a, const Rat& t, const Rat& grid_step) {
  if (t <= 0 || grid_step <= 0) throw input_error("grid_shatter_search: positive t and step");
  const Rat quotient = t / grid_step;
  if (denominator(quotient) != 1 && grid_step > t / 4)
    throw input_error("grid too coarse: step must divide t or be at most t/4");
  if (a.empty()) return 0;
  const int n = a.dim();

  for (int k = n; k >= 1; --k) {
    for (const auto& coords : IndexSet::of_size(n, k)) {
      IntegerPointSet s = project(a, coords);
      // Grid spanning [min - t, max] per coordinate.
      std::vector<std::vector<Rat>> levels(k);
      for (int c = 0; c < k; ++c) {
        Int lo = s.points()[0][c], hi = lo;
        for (const auto& p : s.points()) {
          lo = std::min(lo, p[c]);
          hi = std::max(hi, p[c]);
        }
        for (Rat h = Rat(lo) - t; h <= Rat(hi); h += grid_step) levels[c].push_back(h);
      }
      std::vector<std::size_t> pick(k, 0);
      bool shattered = false;
      for (;;) {
        bool all = true;
        for (std::uint32_t part = 0; part < (1u << k) && all; ++part) {
          bool exists = false;
          for (const auto& pnt : s.points()) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
              const Rat& h = levels[c][pick[c]];
              if (part & (1u << c))
                ok = Rat(pnt[c]) >= h + t;
              else
                ok = Rat(pnt[c]) <= h;
            }
            if (ok) {
              exists = true;
              break;
            }
          }
          all = exists;
        }
        if (all) {
          shattered = true;
          break;
        }
        int c = 0;
        while (c < k && ++pick[c] == levels[c].size()) pick[c++] = 0;
        if (c == k) break;
      }
      if (shattered) return k;
    }
  }
  return 0;
}

McEstimate mc_volume(const RationalPolytope& body, const ConstantsConfig& cfg) {
  if (body.is_empty()) throw input_error("mc_volume of the empty body");
  const int n = body.dim();
  std::vector<std::vector<double>> pts;
  pts.reserve(body.vertices().size());
  for (const auto& v : body.vertices()) {
    std::vector<double> p(n);
    for (int c = 0; c < n; ++c) p[c] = to_double(v[c]);
    pts.push_back(std::move(p));
  }
  auto [rlo, rhi] = body.bounding_box();
  std::vector<double> lo(n), hi(n);
  for (int c = 0; c < n; ++c) {
    lo[c] = to_double(rlo[c]);
    hi[c] = to_double(rhi[c]);
    if (hi[c] <= lo[c]) {  // flat body: zero volume, no sampling possible
      McEstimate est;
      est.samples = cfg.mc_samples;
      est.seed = cfg.mc_seed;
      est.zero_hits = true;
      return est;
    }
  }
  return mc_box_hit_rate(
      [&pts](const std::vector<double>& x) {
        return hull_feasible<double>(pts, x, 1e-9);
      },
      lo, hi, cfg);
}

McEstimate mc_volume(const std::function<bool(const std::vector<double>&)>& member,
                     const std::vector<double>& lo, const std::vector<double>& hi,
                     const ConstantsConfig& cfg) {
  return mc_box_hit_rate(member, lo, hi, cfg);
}

long long exhaustive_cell_count(const RationalPolytope& body, const IndexSet& coords) {
  if (coords.is_trivial()) throw input_error("cell count needs a nonempty index set");
  if (body.is_empty()) return 0;
  const int d = coords.size();

  std::vector<RatVec> proj;
  proj.reserve(body.vertices().size());
  for (const auto& v : body.vertices()) {
    RatVec q(d);
    for (int c = 0; c < d; ++c) q[c] = v[coords.indices()[c] - 1];
    proj.push_back(std::move(q));
  }

  std::vector<long long> lo(d), hi(d);
  for (int c = 0; c < d; ++c) {
    Rat mn = proj[0][c], mx = mn;
    for (const auto& q : proj) {
      mn = std::min(mn, q[c]);
      mx = std::max(mx, q[c]);
    }
    lo[c] = ceil_rat(mn).convert_to<long long>();
    hi[c] = floor_rat(mx - 1).convert_to<long long>();
    if (hi[c] < lo[c]) return 0;
  }

  long long count = 0;
  std::vector<long long> base(lo);
  for (;;) {
    bool all_corners = true;
    for (std::uint32_t corner = 0; corner < (1u << d) && all_corners; ++corner) {
      RatVec x(d);
      for (int c = 0; c < d; ++c) x[c] = base[c] + ((corner >> c) & 1);
      all_corners = oracle_contains_exact(proj, x);
    }
    if (all_corners) ++count;
    int c = 0;
    while (c < d && base[c] == hi[c]) ++c;
    if (c == d) break;
    ++base[c];
    for (int b = 0; b < c; ++b) base[b] = lo[b];
  }
  return count;
}

}  // namespace latcell

#include "latcell/dd.hpp"

#include <algorithm>
#include <cstdint>

namespace latcell {

namespace {

constexpr std::size_t kRayCap = 2'000'000;

struct Ray {
  IntVec v;
  std::vector<std::uint64_t> zero;  // bit per processed constraint

  void push_zero_bit(std::size_t pos, bool value) {
    if (pos / 64 >= zero.size()) zero.push_back(0);
    if (value) zero[pos / 64] |= (1ULL << (pos % 64));
  }
};

int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int n = 0;
  const std::size_t w = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < w; ++i)
    n += __builtin_popcountll(a[i] & b[i]);
  return n;
}

// zero(a) & zero(b) subset of zero(t)?
bool and_subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                   const std::vector<std::uint64_t>& t) {
  const std::size_t w = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < w; ++i) {
    std::uint64_t common = a[i] & b[i];
    std::uint64_t tw = i < t.size() ? t[i] : 0;
    if (common & ~tw) return false;
  }
  return true;
}

IntVec scale_primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

}  // namespace

std::vector<IntVec> dd_extreme_rays(const std::vector<RatVec>& rat_rows) {
  if (rat_rows.empty()) throw precondition_error("dd: no constraints (cone not pointed)");
  const std::size_t dim = rat_rows[0].size();

  std::vector<IntVec> rows;
  rows.reserve(rat_rows.size());
  for (const auto& r : rat_rows) {
    if (r.size() != dim) throw input_error("dd: inconsistent row lengths");
    rows.push_back(primitive_integer_vector(r));
  }

  // Greedily pick dim linearly independent rows for the simplicial start.
  std::vector<std::size_t> init_idx;
  {
    RatMatrix basis;
    for (std::size_t i = 0; i < rows.size() && init_idx.size() < dim; ++i) {
      RatMatrix trial = basis;
      RatVec row(dim);
      for (std::size_t c = 0; c < dim; ++c) row[c] = Rat(rows[i][c]);
      trial.push_back(row);
      if (rank(trial) == static_cast<int>(trial.size())) {
        basis = std::move(trial);
        init_idx.push_back(i);
      }
    }
    if (init_idx.size() < dim)
      throw precondition_error("dd: cone is not pointed (constraint rank deficient)");
  }

  // Initial rays: columns of B^{-1} where B stacks the chosen rows.
  RatMatrix b(dim, RatVec(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) b[r][c] = Rat(rows[init_idx[r]][c]);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVec e(dim, Rat(0));
    e[j] = 1;
    auto col = solve_square(b, e);
    Ray ray;
    ray.v = primitive_integer_vector(*col);
    rays.push_back(std::move(ray));
  }

  // Process order: the initial rows, then the rest in input order.
  std::vector<std::size_t> order = init_idx;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (std::find(init_idx.begin(), init_idx.end(), i) == init_idx.end())
      order.push_back(i);

  // Zero bits for the initial simplicial cone.
  for (std::size_t k = 0; k < dim; ++k) {
    const IntVec& m = rows[order[k]];
    for (auto& ray : rays) ray.push_zero_bit(k, dot(m, ray.v) == 0);
  }

  for (std::size_t k = dim; k < order.size(); ++k) {
    const IntVec& m = rows[order[k]];
    std::vector<Int> s(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(m, rays[i].v);
      if (s[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].push_zero_bit(k, s[i] == 0);
      continue;
    }

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) pos.push_back(i);
      else if (s[i] < 0) neg.push_back(i);
    }

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] >= 0) {
        Ray kept = rays[i];
        kept.push_zero_bit(k, s[i] == 0);
        next.push_back(std::move(kept));
      }
    }

    const int min_common = static_cast<int>(dim) - 2;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        if (popcount_and(rays[p].zero, rays[q].zero) < min_common) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (and_subset_of(rays[p].zero, rays[q].zero, rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;

        Ray w;
        w.v.resize(dim);
        for (std::size_t c = 0; c < dim; ++c)
          w.v[c] = s[p] * rays[q].v[c] - s[q] * rays[p].v[c];
        w.v = scale_primitive(w.v);
        for (std::size_t kk = 0; kk <= k; ++kk)
          w.push_zero_bit(kk, dot(rows[order[kk]], w.v) == 0);
        next.push_back(std::move(w));
        if (next.size() > kRayCap)
          throw precondition_error("dd: intermediate ray count exceeds cap");
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

}  // namespace latcell

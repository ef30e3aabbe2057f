#include "latcell/generators.hpp"

#include <cmath>
#include <random>

#include "latcell/body_ratios.hpp"

namespace latcell {

namespace {

constexpr long long kLatticeDenominator = 8;

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void check_density(double d) {
  if (!(d > 0.0 && d <= 1.0)) throw input_error("density must lie in (0, 1]");
}

}  // namespace

IntegerPointSet gen_discrete(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  if (n <= 0) throw input_error("gen_discrete: dimension must be positive");

  if (spec.family == "boolean_random") {
    if (n > 12) throw input_error("boolean_random: n <= 12");
    check_density(spec.density);
    std::vector<IntVec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (uniform01(rng) >= spec.density) continue;
      IntVec p(n);
      for (int c = 0; c < n; ++c) p[c] = (mask >> c) & 1;
      pts.push_back(std::move(p));
    }
    return IntegerPointSet(n, std::move(pts));
  }

  if (spec.family == "box_random") {
    if (n > 5) throw input_error("box_random: n <= 5");
    check_density(spec.density);
    std::vector<long long> bounds = spec.box_bounds;
    if (bounds.empty()) bounds.assign(n, spec.grid_max);
    if (static_cast<int>(bounds.size()) != n)
      throw input_error("box_random: bounds length must equal n");
    std::vector<IntVec> pts;
    IntVec x(n, Int(0));
    for (;;) {
      if (uniform01(rng) < spec.density) pts.push_back(x);
      int c = 0;
      while (c < n && x[c] == bounds[c]) x[c++] = 0;
      if (c == n) break;
      ++x[c];
    }
    return IntegerPointSet(n, std::move(pts));
  }

  if (spec.family == "diagonal") {
    std::vector<IntVec> pts;
    for (long long k = 0; k <= spec.grid_max; ++k)
      pts.push_back(IntVec(n, Int(k)));
    return IntegerPointSet(n, std::move(pts));
  }

  if (spec.family == "full_grid") {
    std::vector<IntVec> pts;
    IntVec x(n, Int(0));
    for (;;) {
      pts.push_back(x);
      int c = 0;
      while (c < n && x[c] == spec.grid_max) x[c++] = 0;
      if (c == n) break;
      ++x[c];
    }
    return IntegerPointSet(n, std::move(pts));
  }

  throw input_error("unknown discrete family: " + spec.family);
}

RationalPolytope gen_polytope(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  if (n <= 0) throw input_error("gen_polytope: dimension must be positive");

  if (spec.family == "cube") {
    std::vector<RatVec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      RatVec v(n);
      for (int c = 0; c < n; ++c) v[c] = (mask & (1u << c)) ? spec.scale : -spec.scale;
      pts.push_back(std::move(v));
    }
    return RationalPolytope::from_points(n, std::move(pts));
  }

  if (spec.family == "parallelepiped") {
    if (static_cast<int>(spec.lengths.size()) != n)
      throw input_error("parallelepiped: semiaxis count must equal n");
    for (const auto& a : spec.lengths)
      if (a <= 0) throw input_error("parallelepiped: semiaxes must be positive");
    std::vector<RatVec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      RatVec v(n);
      for (int c = 0; c < n; ++c)
        v[c] = (mask & (1u << c)) ? spec.lengths[c] : -spec.lengths[c];
      pts.push_back(std::move(v));
    }
    return RationalPolytope::from_points(n, std::move(pts));
  }

  if (spec.family == "cross") {
    std::vector<RatVec> pts;
    for (int i = 0; i < n; ++i)
      for (int sign : {-1, 1}) {
        RatVec v(n, Rat(0));
        v[i] = sign * spec.scale;
        pts.push_back(std::move(v));
      }
    return RationalPolytope::from_points(n, std::move(pts));
  }

  if (spec.family == "random_hull") {
    const long long cap =
        (numerator(spec.scale) * kLatticeDenominator / denominator(spec.scale))
            .convert_to<long long>();
    if (cap <= 0) throw input_error("random_hull: scale too small");
    std::vector<RatVec> pts;
    const int count = spec.symmetric ? (spec.m + 1) / 2 : spec.m;
    for (int i = 0; i < count; ++i) {
      RatVec v(n);
      for (int c = 0; c < n; ++c)
        v[c] = Rat(uniform_int(rng, -cap, cap)) / kLatticeDenominator;
      if (spec.symmetric) {
        RatVec neg(n);
        for (int c = 0; c < n; ++c) neg[c] = -v[c];
        pts.push_back(std::move(neg));
      }
      pts.push_back(std::move(v));
    }
    return RationalPolytope::from_points(n, std::move(pts));
  }

  if (spec.family == "pancake") {
    if (static_cast<int>(spec.lengths.size()) != n)
      throw input_error("pancake: edge length count must equal n");
    std::vector<RatVec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      RatVec v(n);
      for (int c = 0; c < n; ++c) v[c] = (mask & (1u << c)) ? spec.lengths[c] : Rat(0);
      pts.push_back(std::move(v));
    }
    return RationalPolytope::from_points(n, std::move(pts));
  }

  if (spec.family == "lp_ball") return lp_ball_polytope(spec.p, n);

  throw input_error("unknown polytope family: " + spec.family);
}

OracleBody::OracleBody(int dim, int k, double p, Rat eps)
    : dim_(dim), k_(k), p_(p), eps_(std::move(eps)) {
  if (dim <= 0) throw input_error("sharpness body: dimension must be positive");
  if (!(k >= (dim + 1) / 2 && k < dim))
    throw input_error("sharpness body requires n/2 <= k < n");
  if (p < 1.0) throw input_error("sharpness body requires p >= 1");
  if (eps_ <= 0) throw input_error("sharpness body requires eps > 0");
}

bool OracleBody::contains(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw input_error("point length mismatch");
  const double eps = to_double(eps_);
  int small = 0;
  double mass = 0;
  double maxabs = 0;
  for (double c : x) {
    const double a = std::abs(c);
    if (a <= eps) ++small;
    maxabs = std::max(maxabs, a);
    if (p_ != kInfinity) mass += std::pow(a, p_);
  }
  const bool in_ball = p_ == kInfinity ? maxabs <= 1.0 : mass <= static_cast<double>(dim_);
  return in_ball && small >= k_;
}

bool OracleBody::contains_exact(const RatVec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw input_error("point length mismatch");
  int small = 0;
  Rat l1 = 0, l2 = 0;
  Rat maxabs = 0;
  for (const Rat& c : x) {
    Rat a = c < 0 ? -c : c;
    if (a <= eps_) ++small;
    l1 += a;
    l2 += a * a;
    maxabs = std::max(maxabs, a);
  }
  bool in_ball;
  if (p_ == 1.0) in_ball = l1 <= dim_;
  else if (p_ == 2.0) in_ball = l2 <= dim_;
  else if (p_ == kInfinity) in_ball = maxabs <= 1;
  else throw input_error("exact membership only for p in {1, 2, inf}");
  return in_ball && small >= k_;
}

std::pair<std::vector<double>, std::vector<double>> OracleBody::bounding_box() const {
  const double r = p_ == kInfinity ? 1.0 : std::pow(static_cast<double>(dim_), 1.0 / p_);
  return {std::vector<double>(dim_, -r), std::vector<double>(dim_, r)};
}

OracleBody gen_sharpness_body(int n, int k, double p, const Rat& eps) {
  return OracleBody(n, k, p, eps);
}

}  // namespace latcell

#include "latcell/body_ratios.hpp"

#include <cmath>
#include <random>

namespace latcell {

bool LpBallSpec::contains(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n) throw input_error("point length mismatch");
  if (p == kInfinity) {
    for (double c : x)
      if (std::abs(c) > 1.0) return false;
    return true;
  }
  double mass = 0;
  for (double c : x) mass += std::pow(std::abs(c), p);
  return mass <= static_cast<double>(n);
}

std::pair<std::vector<double>, std::vector<double>> LpBallSpec::bounding_box() const {
  const double r = p == kInfinity ? 1.0 : std::pow(static_cast<double>(n), 1.0 / p);
  return {std::vector<double>(n, -r), std::vector<double>(n, r)};
}

RationalPolytope LpBallSpec::polytope() const { return lp_ball_polytope(p, n); }

RationalPolytope lp_ball_polytope(double p, int n) {
  if (p == 1.0) {
    std::vector<RatVec> pts;
    for (int i = 0; i < n; ++i)
      for (int sign : {-1, 1}) {
        RatVec v(n, Rat(0));
        v[i] = Rat(sign * n);
        pts.push_back(std::move(v));
      }
    return RationalPolytope::from_points(n, std::move(pts));
  }
  if (p == kInfinity) {
    std::vector<RatVec> pts;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      RatVec v(n);
      for (int c = 0; c < n; ++c) v[c] = (m & (1u << c)) ? 1 : -1;
      pts.push_back(std::move(v));
    }
    return RationalPolytope::from_points(n, std::move(pts));
  }
  throw input_error("polytope form of the L_p ball exists only for p in {1, inf}");
}

Rat lp_ball_volume_exact(double p, int k) {
  if (p == kInfinity) {
    Rat v = 1;
    for (int i = 0; i < k; ++i) v *= 2;
    return v;
  }
  if (p == 1.0) {
    // (2k)^k / k!
    Rat num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
      num *= 2 * k;
      den *= i;
    }
    return num / den;
  }
  throw input_error("exact L_p ball volume only for p in {1, inf}");
}

double lp_ball_volume(double p, int k) {
  if (p < 1.0) throw input_error("L_p ball requires p >= 1");
  if (k <= 0) throw input_error("L_p ball requires positive dimension");
  if (p == kInfinity) return std::exp(k * std::log(2.0));
  // k^{k/p} (2 Gamma(1 + 1/p))^k / Gamma(1 + k/p)
  const double log_a = std::log(2.0 * std::tgamma(1.0 + 1.0 / p));
  const double logv =
      (k / p) * std::log(static_cast<double>(k)) + k * log_a - std::lgamma(1.0 + k / p);
  return std::exp(logv);
}

namespace {

VolumeRatioResult volume_ratio_extremum(const RationalPolytope& body, int k,
                                        const Rat& constant, bool sections) {
  const int n = body.dim();
  if (k <= 0 || k >= n) throw input_error("volume ratio requires 0 < k < n");
  if (!body.full_dimensional())
    throw precondition_error("volume ratio requires a full-dimensional body");

  Rat cn = 1;
  for (int i = 0; i < n; ++i) cn *= constant;
  const Rat scaled_volume = cn * body.volume();

  VolumeRatioResult out;
  bool seen = false;
  for (const auto& kept : IndexSet::all_nonempty(n)) {
    const int codim = n - kept.size();
    if (codim < k) continue;
    RationalPolytope low = sections ? body.section(kept) : body.project_onto(kept);
    Rat vol = low.volume();
    VolumeRatioTerm term{kept, codim, Rat(0), vol == 0};
    if (vol != 0) term.ratio = scaled_volume / vol;
    out.terms.push_back(term);
    if (term.degenerate) {
      out.any_degenerate = true;
      if (sections) {  // a zero-volume section dominates the maximum
        out.value = kInfinity;
        out.best = term;
      }
      continue;
    }
    const double val = std::pow(to_double(term.ratio), 1.0 / codim);
    if (sections) {
      if (out.value != kInfinity && (!seen || val > out.value)) {
        out.value = val;
        out.best = term;
      }
    } else {
      if (!seen || val < out.value) {
        out.value = val;
        out.best = term;
      }
    }
    seen = true;
  }
  if (!out.best)
    throw precondition_error("no admissible coordinate subspace for the volume ratio");
  return out;
}

}  // namespace

VolumeRatioResult min_projection_volume_ratio(const RationalPolytope& body, int k,
                                              const Rat& c) {
  return volume_ratio_extremum(body, k, c, /*sections=*/false);
}

VolumeRatioResult max_section_volume_ratio(const RationalPolytope& body, int k,
                                           const Rat& big_c) {
  return volume_ratio_extremum(body, k, big_c, /*sections=*/true);
}

VolumeFraction ball_volume_fraction(const RationalPolytope& body, double p,
                                    const ConstantsConfig& cfg,
                                    std::optional<double> tolerance) {
  const int n = body.dim();
  if (p < 1.0) throw input_error("ball volume fraction requires p >= 1");
  if (body.is_empty()) throw precondition_error("volume fraction of the empty body");

  VolumeFraction out;
  if (p == 1.0 || p == kInfinity) {
    RationalPolytope ball = lp_ball_polytope(p, n);
    Rat inter = intersection(body, ball).volume();
    out.exact = true;
    out.exact_value = inter / lp_ball_volume_exact(p, n);
    out.value = to_double(out.exact_value);
    return out;
  }

  // A body verified inside the Euclidean ball needs no sampling: the
  // numerator is its exact volume.
  if (p == 2.0) {
    bool inside = true;
    for (const auto& v : body.vertices()) {
      Rat mass = 0;
      for (const Rat& c : v) mass += c * c;
      if (mass > n) {
        inside = false;
        break;
      }
    }
    if (inside) {
      out.analytic = true;
      out.value = to_double(body.volume()) / lp_ball_volume(2.0, n);
      return out;
    }
  }

  // Accept-reject sampling from the bounding cube of B_p^n; the fraction of
  // in-ball samples landing in K estimates mu_p.
  const double radius = std::pow(static_cast<double>(n), 1.0 / p);
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const auto& f : body.facets()) {
    std::vector<double> a(n);
    for (int c = 0; c < n; ++c) a[c] = f.normal[c].convert_to<double>();
    normals.push_back(std::move(a));
    offsets.push_back(f.offset.convert_to<double>());
  }

  std::mt19937_64 rng(cfg.mc_seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  long long in_ball = 0, in_body = 0;
  std::vector<double> x(n);
  for (long long s = 0; s < cfg.mc_samples; ++s) {
    double mass = 0;
    for (int c = 0; c < n; ++c) {
      x[c] = (2.0 * unit() - 1.0) * radius;
      mass += std::pow(std::abs(x[c]), p);
    }
    if (mass > static_cast<double>(n)) continue;
    ++in_ball;
    bool inside = true;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) {
      double dot = 0;
      for (int c = 0; c < n; ++c) dot += normals[f][c] * x[c];
      inside = dot <= offsets[f];
    }
    if (inside) ++in_body;
  }
  if (in_ball == 0)
    throw precondition_error("no Monte Carlo samples landed in the ball");
  const double mu = static_cast<double>(in_body) / static_cast<double>(in_ball);
  out.value = mu;
  out.samples = in_ball;
  out.half_width_95 = 1.96 * std::sqrt(std::max(mu * (1.0 - mu), 1e-12) /
                                       static_cast<double>(in_ball));
  if (tolerance && out.half_width_95 > *tolerance) out.budget_flag = true;
  return out;
}

L1SectionWidth coordinate_l1_width(const RationalPolytope& body, int k) {
  const int n = body.dim();
  if (k < 1 || k > n) throw input_error("l1 width requires 1 <= k <= n");
  if (n > 20) throw input_error("exhaustive subset minimum is limited to n <= 20");
  if (!body.is_symmetric())
    throw precondition_error("l1 width requires a symmetric body");

  std::optional<L1SectionWidth> best;
  for (const auto& coords : IndexSet::of_size(n, k)) {
    Rat inner = 0;  // max over vertices of the coordinate l1 mass
    for (const auto& v : body.vertices()) {
      Rat mass = 0;
      for (int idx : coords.indices()) {
        Rat c = v[idx - 1];
        mass += c < 0 ? -c : c;
      }
      inner = std::max(inner, mass);
    }
    if (!best || inner < best->inner) best = L1SectionWidth{inner, coords, 0.0};
  }
  best->value = 2.0 * to_double(best->inner) / std::sqrt(static_cast<double>(n));
  return *best;
}

}  // namespace latcell

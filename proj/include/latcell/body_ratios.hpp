// Volume-based quantities of convex bodies over coordinate subspaces:
// normalized L_p balls and their volumes, projection/section volume-ratio
// extrema, the normalized volume fraction within an L_p ball, and the minimal
// coordinate-section l1 width.
#pragma once

#include <limits>
#include <optional>

#include "latcell/polytope.hpp"

namespace latcell {

/// Configuration for the floating constants and Monte Carlo runs. The
/// absolute constants in the section/projection bounds are open; these are
/// explicit knobs with sweep support.
struct ConstantsConfig {
  Rat c_projection_ratio = Rat(1) / 4;  // constant c in the projection ratio
  Rat C_section_ratio = Rat(6);         // constant C in the section ratio
  double c_cube_fraction = 0.01;        // conservative floor for the cube-scale law
  long long mc_samples = 100000;
  std::uint64_t mc_seed = 0x5EED;
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// The L_p^n ball normalized as {sum |x_i|^p <= n} (max norm <= 1 for p = inf).
struct LpBallSpec {
  double p = 2.0;
  int n = 1;

  bool contains(const std::vector<double>& x) const;
  std::pair<std::vector<double>, std::vector<double>> bounding_box() const;
  /// Polytope form; exists only for p in {1, inf}.
  RationalPolytope polytope() const;
};

RationalPolytope lp_ball_polytope(double p, int n);

/// Volume of the normalized L_p^k ball via Gamma evaluation.
double lp_ball_volume(double p, int k);

/// Exact rational volume for p in {1, inf}.
Rat lp_ball_volume_exact(double p, int k);

struct VolumeRatioTerm {
  IndexSet kept;
  int codim = 0;
  Rat ratio;              // the rational inside the 1/codim root
  bool degenerate = false;  // zero-volume projection/section
};

struct VolumeRatioResult {
  double value = 0;  // the min/max of ratio^(1/codim) over admissible subspaces
  std::optional<VolumeRatioTerm> best;
  std::vector<VolumeRatioTerm> terms;
  bool any_degenerate = false;
};

/// min over coordinate subspaces E with codim >= k of
/// (vol(cK) / vol(P_E K))^(1/codim E); degenerate projections are skipped.
VolumeRatioResult min_projection_volume_ratio(const RationalPolytope& body, int k,
                                              const Rat& c);

/// max over coordinate subspaces E with codim >= k of
/// (vol(CK) / vol(K cap E))^(1/codim E); zero-volume sections dominate (+inf).
VolumeRatioResult max_section_volume_ratio(const RationalPolytope& body, int k,
                                           const Rat& big_c);

struct VolumeFraction {
  double value = 0;
  bool exact = false;      // exact rational ratio (p in {1, inf})
  bool analytic = false;   // exact volume over the Gamma closed form
  Rat exact_value;         // meaningful when exact
  double half_width_95 = 0;  // meaningful when Monte Carlo
  long long samples = 0;
  bool budget_flag = false;  // set when a requested tolerance was not met
};

/// mu_p(K) = |K cap B_p^n| / |B_p^n|; exact for p in {1, inf}, Monte Carlo
/// with a 95% confidence half-width otherwise.
VolumeFraction ball_volume_fraction(const RationalPolytope& body, double p,
                                    const ConstantsConfig& cfg,
                                    std::optional<double> tolerance = std::nullopt);

struct L1SectionWidth {
  Rat inner;       // min over |I|=k of max over K of sum_{i in I} |x_i|
  IndexSet argmin;
  double value;    // (2/sqrt(n)) * inner
};

/// Minimal l1 mass of the body over k coordinates, scaled by 2/sqrt(n);
/// requires a symmetric body (checked).
L1SectionWidth coordinate_l1_width(const RationalPolytope& body, int k);

}  // namespace latcell

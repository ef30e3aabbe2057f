#include "latcell/duality.hpp"

#include <cmath>

namespace latcell {

DualityExperiment section_duality_experiment(const RationalPolytope& body, int k, int m,
                                             double eps, double c_try) {
  const int n = body.dim();
  if (k < 1 || m < 1 || k + m > (1.0 - eps) * n + 1e-12)
    throw input_error("duality experiment requires k + m <= (1 - eps) n");
  if (n > 6) throw precondition_error("duality experiment: exact mode limited to n <= 6");
  if (!body.is_symmetric() || !body.origin_interior())
    throw precondition_error("duality experiment requires a symmetric body with interior origin");

  const double delta = 1.0 - static_cast<double>(k) / n;
  const double lambda = 1.0 - static_cast<double>(m) / n;
  const double denom = delta + lambda - 1.0;
  if (denom <= 0) throw input_error("degenerate proportions: delta + lambda <= 1");
  const double r1 = std::pow(c_try, (delta - lambda + 1.0) / denom) / std::sqrt(2.0);
  const double r2 = std::pow(c_try, (lambda - delta + 1.0) / denom) / std::sqrt(2.0);

  DualityExperiment out{.case_taken = 0,
                        .witness = IndexSet::full(n),
                        .witness_in_polar = false,
                        .product = Rat(0),
                        .r_k = 0,
                        .r_m_polar = 0,
                        .t1 = 0,
                        .t2 = 0,
                        .auxiliary_volume = Rat(0),
                        .split_threshold = 0,
                        .bound = 0,
                        .pass = false};
  out.t1 = 1.0 / (2.0 * r1);
  out.t2 = 1.0 / (2.0 * r2);

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const Rat cube_half = rational_approx(out.t1 / sqrt_n);       // t1 n^{-1/2} B_inf
  const Rat cross_radius = rational_approx(sqrt_n / out.t2);    // {sum |x| <= sqrt(n)/t2}

  RationalPolytope cube = lp_ball_polytope(kInfinity, n).scale(cube_half);
  RationalPolytope cross =
      lp_ball_polytope(1.0, n).scale(cross_radius / Rat(n));
  RationalPolytope aux = intersection(hull_of_union(body, cube), cross);

  out.auxiliary_volume = aux.volume();
  out.split_threshold = std::pow(2.0 / sqrt_n, n);

  RationalPolytope polar_body = body.polar();
  L1SectionWidth wk = coordinate_l1_width(body, k);
  L1SectionWidth wm = coordinate_l1_width(polar_body, m);
  out.r_k = wk.value;
  out.r_m_polar = wm.value;
  out.product = Rat(4) * wk.inner * wm.inner / Rat(n);

  if (to_double(out.auxiliary_volume) <= out.split_threshold) {
    out.case_taken = 1;
    out.witness = wk.argmin;
    out.witness_in_polar = false;
  } else {
    out.case_taken = 2;
    out.witness = wm.argmin;
    out.witness_in_polar = true;
  }
  out.bound = std::pow(c_try, 1.0 / eps);
  out.pass = to_double(out.product) <= out.bound;
  return out;
}

}  // namespace latcell

// Duality of l1 diameters of coordinate sections: the constructive two-case
// experiment behind r_k(K) r_m(K polar) <= C^(1/eps).
#pragma once

#include "latcell/body_ratios.hpp"

namespace latcell {

struct DualityExperiment {
  int case_taken = 0;        // 1: K carries the bounded section, 2: the polar
  IndexSet witness;          // index set of the bounded coordinate section
  bool witness_in_polar = false;
  Rat product;               // r_k(K) * r_m(K polar), exact: 4 * inner_k * inner_m / n
  double r_k = 0;
  double r_m_polar = 0;
  double t1 = 0, t2 = 0;     // the construction's scale parameters
  Rat auxiliary_volume;      // |K1| for the case split
  double split_threshold = 0;  // |n^{-1/2} B_inf^n|
  double bound = 0;          // C_try^(1/eps)
  bool pass = false;         // product <= bound
};

/// Builds K1 = conv(K u t1 n^{-1/2} B_inf) cap (1/t2) n^{-1/2} B_1, volume
/// tests the case split, and reports which body admits the bounded coordinate
/// section together with the measured product. Scale factors are snapped to
/// rationals so the construction stays exact; the split comparison itself is
/// numeric.
DualityExperiment section_duality_experiment(const RationalPolytope& body, int k, int m,
                                             double eps, double c_try);

}  // namespace latcell

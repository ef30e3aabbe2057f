// Theorem verifiers: each claim id maps to an exact (or flagged Monte Carlo)
// check producing a VerificationReport, plus sweep mode for the floating
// constants.
#pragma once

#include <functional>
#include <vector>

#include "latcell/body_cells.hpp"
#include "latcell/body_ratios.hpp"
#include "latcell/duality.hpp"
#include "latcell/point_set.hpp"
#include "latcell/report.hpp"

namespace latcell {

struct VerifyParams {
  std::optional<int> k;
  std::optional<int> m;
  std::optional<double> p;
  std::optional<double> eps;
  std::optional<double> c_try;
  std::optional<int> slice_coord;          // LEM_2_7: default checks every coordinate
  std::vector<long long> box_bounds;       // HL claims: optional explicit N_i
  std::optional<double> threshold;         // LEM_4_2 ratio bound (default 10)
  int trials = 100;                        // LEM_2_9 translate count
  std::uint64_t seed = 0x5EED;
};

bool is_discrete_claim(const std::string& claim);
bool is_convex_claim(const std::string& claim);

/// Claims: THM_2_2, THM_2_4, LEM_2_7, SAUER_SHELAH, PAJOR_1, HL_I, HL_II, HL_III.
VerificationReport verify_discrete(const std::string& claim, const IntegerPointSet& a,
                                   const VerifyParams& params);

/// Claims: THM_1_1, THM_2_10, LEM_2_9, THM_3_1, THM_3_4, LEM_3_5, THM_4_1,
/// LEM_4_2, SECTION_POLAR, SANTALO, THM_5_1.
VerificationReport verify_convex(const std::string& claim, const RationalPolytope& body,
                                 const VerifyParams& params, const ConstantsConfig& cfg);

struct SweepResult {
  std::string claim;
  double measured = 0;  // the discovered constant
  std::string description;
  std::vector<VerificationReport> reports;
};

/// Finds the corpus-wide measured constant for a claim: the largest safe c
/// (THM_4_1), the smallest sufficient C (THM_3_1, LEM_3_5), the extreme ratio
/// or product (LEM_4_2, SANTALO, THM_5_1).
SweepResult sweep_claim(const std::string& claim,
                        const std::vector<RationalPolytope>& corpus,
                        const VerifyParams& params, const ConstantsConfig& cfg);

}  // namespace latcell

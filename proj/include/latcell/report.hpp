// Structured outcome of a theorem check.
#pragma once

#include <optional>
#include <string>

#include "latcell/rational.hpp"

namespace latcell {

struct VerificationReport {
  std::string claim;
  std::string input_digest;
  double lhs = 0;
  double rhs = 0;
  std::optional<Rat> lhs_exact;  // set when the side was computed exactly
  std::optional<Rat> rhs_exact;
  bool pass = false;
  std::string witness;
  std::optional<double> measured_constant;
  std::string provenance = "exact";  // "exact" | "mc" | "mixed"
  std::optional<double> ci_half_width;
  std::string notes;
};

}  // namespace latcell

// File formats and report serialization.
//
// Point set:  {"dim": n, "points": [[int, ...], ...]}
// Polytope:   {"dim": n, "vertices": [["p/q", ...], ...],
//              "facets": [{"normal": [...], "offset": "p/q"}, ...]}  (optional)
// Reports are emitted as JSON or CSV with the columns
// (claim, lhs, rhs, pass, witness, constant, provenance, ci).
#pragma once

#include <string>
#include <vector>

#include "latcell/body_ratios.hpp"
#include "latcell/point_set.hpp"
#include "latcell/polytope.hpp"
#include "latcell/report.hpp"

namespace latcell {

struct RunManifest {
  std::string command_line;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string tool_version;
  double wall_ms = 0;
};

IntegerPointSet load_point_set(const std::string& path);
void save_point_set(const IntegerPointSet& a, const std::string& path);
std::string point_set_to_json(const IntegerPointSet& a);
IntegerPointSet point_set_from_json(const std::string& text);

RationalPolytope load_polytope(const std::string& path);
void save_polytope(const RationalPolytope& k, const std::string& path,
                   bool with_facets = false);
std::string polytope_to_json(const RationalPolytope& k, bool with_facets = false);
RationalPolytope polytope_from_json(const std::string& text);

ConstantsConfig load_config(const std::string& path);

std::string report_to_json(const VerificationReport& r, const RunManifest& manifest);
std::string report_to_csv_row(const VerificationReport& r);
std::string report_csv_header();

/// FNV-1a digest of the canonical serialization; stable across runs.
std::string digest_point_set(const IntegerPointSet& a);
std::string digest_polytope(const RationalPolytope& k);
std::string digest_string(const std::string& text);

}  // namespace latcell

#include "latcell/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latcell {

namespace {

using json = nlohmann::ordered_json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
}

json rat_vec_to_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_to_string(x));
  return arr;
}

}  // namespace

std::string point_set_to_json(const IntegerPointSet& a) {
  json j;
  j["dim"] = a.dim();
  json pts = json::array();
  for (const auto& p : a.points()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.str());
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

IntegerPointSet point_set_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("points"))
    throw input_error("point set file needs fields 'dim' and 'points'");
  const int dim = j["dim"].get<int>();
  std::vector<IntVec> pts;
  for (const auto& row : j["points"]) {
    IntVec p;
    for (const auto& c : row) {
      if (c.is_number_integer())
        p.emplace_back(c.get<long long>());
      else
        p.emplace_back(Int(c.get<std::string>()));
    }
    pts.push_back(std::move(p));
  }
  return IntegerPointSet(dim, std::move(pts), /*reject_duplicates=*/true);
}

IntegerPointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return point_set_from_json(buf.str());
}

void save_point_set(const IntegerPointSet& a, const std::string& path) {
  write_file(path, point_set_to_json(a));
}

std::string polytope_to_json(const RationalPolytope& k, bool with_facets) {
  json j;
  j["dim"] = k.dim();
  json verts = json::array();
  for (const auto& v : k.vertices()) verts.push_back(rat_vec_to_json(v));
  j["vertices"] = std::move(verts);
  if (with_facets && k.full_dimensional()) {
    json facets = json::array();
    for (const auto& f : k.facets()) {
      json ff;
      json normal = json::array();
      for (const auto& c : f.normal) normal.push_back(c.str());
      ff["normal"] = std::move(normal);
      ff["offset"] = f.offset.str();
      facets.push_back(std::move(ff));
    }
    j["facets"] = std::move(facets);
  }
  return j.dump(2) + "\n";
}

RationalPolytope polytope_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("vertices"))
    throw input_error("polytope file needs fields 'dim' and 'vertices'");
  const int dim = j["dim"].get<int>();
  std::vector<RatVec> verts;
  for (const auto& row : j["vertices"]) {
    RatVec v;
    for (const auto& c : row) {
      if (c.is_number_integer())
        v.emplace_back(c.get<long long>());
      else
        v.emplace_back(parse_rational(c.get<std::string>()));
    }
    verts.push_back(std::move(v));
  }
  RationalPolytope body = RationalPolytope::from_points(dim, std::move(verts));

  // A provided H-representation is audited against the canonical body: every
  // vertex satisfies every halfspace, and every halfspace is supporting.
  if (j.contains("facets")) {
    for (const auto& ff : j["facets"]) {
      RatVec normal;
      for (const auto& c : ff["normal"]) {
        if (c.is_number_integer())
          normal.emplace_back(c.get<long long>());
        else
          normal.emplace_back(parse_rational(c.get<std::string>()));
      }
      Rat offset = ff["offset"].is_number_integer()
                       ? Rat(ff["offset"].get<long long>())
                       : parse_rational(ff["offset"].get<std::string>());
      bool touched = false;
      for (const auto& v : body.vertices()) {
        Rat s = dot(normal, v);
        if (s > offset)
          throw input_error("facet in file cuts off a vertex of the body");
        if (s == offset) touched = true;
      }
      if (!touched)
        throw input_error("facet in file is not supporting");
    }
  }
  return body;
}

RationalPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return polytope_from_json(buf.str());
}

void save_polytope(const RationalPolytope& k, const std::string& path, bool with_facets) {
  write_file(path, polytope_to_json(k, with_facets));
}

ConstantsConfig load_config(const std::string& path) {
  json j = read_json_file(path);
  ConstantsConfig cfg;
  if (j.contains("c_projection_ratio"))
    cfg.c_projection_ratio = parse_rational(j["c_projection_ratio"].get<std::string>());
  if (j.contains("C_section_ratio"))
    cfg.C_section_ratio = parse_rational(j["C_section_ratio"].get<std::string>());
  if (j.contains("c_cube_fraction")) cfg.c_cube_fraction = j["c_cube_fraction"].get<double>();
  if (j.contains("mc_samples")) cfg.mc_samples = j["mc_samples"].get<long long>();
  if (j.contains("mc_seed")) cfg.mc_seed = j["mc_seed"].get<std::uint64_t>();
  if (cfg.c_projection_ratio <= 0 || cfg.C_section_ratio <= 0 || cfg.c_cube_fraction <= 0 ||
      cfg.mc_samples <= 0)
    throw input_error("config constants must be positive");
  return cfg;
}

std::string report_to_json(const VerificationReport& r, const RunManifest& manifest) {
  json j;
  j["claim"] = r.claim;
  j["input_digest"] = r.input_digest;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.lhs_exact) j["lhs_exact"] = rational_to_string(*r.lhs_exact);
  if (r.rhs_exact) j["rhs_exact"] = rational_to_string(*r.rhs_exact);
  j["pass"] = r.pass;
  j["witness"] = r.witness;
  if (r.measured_constant) j["measured_constant"] = *r.measured_constant;
  j["provenance"] = r.provenance;
  if (r.ci_half_width) j["ci_half_width"] = *r.ci_half_width;
  if (!r.notes.empty()) j["notes"] = r.notes;
  json m;
  m["command_line"] = manifest.command_line;
  m["config_digest"] = manifest.config_digest;
  m["seed"] = manifest.seed;
  m["tool_version"] = manifest.tool_version;
  m["wall_ms"] = manifest.wall_ms;
  j["manifest"] = std::move(m);
  return j.dump(2) + "\n";
}

std::string report_csv_header() {
  return "claim,lhs,rhs,lhs_exact,rhs_exact,pass,witness,constant,provenance,ci";
}

namespace {
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}
}  // namespace

std::string report_to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.claim << "," << r.lhs << "," << r.rhs << ","
     << (r.lhs_exact ? rational_to_string(*r.lhs_exact) : "") << ","
     << (r.rhs_exact ? rational_to_string(*r.rhs_exact) : "") << ","
     << (r.pass ? "true" : "false") << "," << csv_quote(r.witness) << ",";
  if (r.measured_constant) os << *r.measured_constant;
  os << "," << r.provenance << ",";
  if (r.ci_half_width) os << *r.ci_half_width;
  return os.str();
}

std::string digest_string(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string digest_point_set(const IntegerPointSet& a) {
  return digest_string(point_set_to_json(a));
}

std::string digest_polytope(const RationalPolytope& k) {
  return digest_string(polytope_to_json(k));
}

}  // namespace latcell

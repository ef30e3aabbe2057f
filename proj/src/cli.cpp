#include "latcell/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcell/generators.hpp"
#include "latcell/io.hpp"
#include "latcell/oracles.hpp"
#include "latcell/verify.hpp"

namespace latcell {

namespace {

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw input_error("empty index list");
  return out;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  return std::stod(text);
}

// Cell content recomputed through the literal sign-pattern membership test.
long long oracle_cell_content(const IntegerPointSet& a) {
  if (a.empty()) return 0;
  long long total = 1;
  for (const auto& i : IndexSet::all_nonempty(a.dim())) {
    IntegerPointSet s = project(a, i);
    if (s.empty()) continue;
    const int d = i.size();
    IntVec lo = s.points()[0], hi = lo;
    for (const auto& p : s.points())
      for (int c = 0; c < d; ++c) {
        lo[c] = std::min(lo[c], p[c]);
        hi[c] = std::max(hi[c], p[c]);
      }
    std::vector<Int> base(lo.begin(), lo.end());
    bool room = true;
    for (int c = 0; c < d; ++c)
      if (hi[c] - lo[c] < 1) room = false;
    if (!room) continue;
    for (;;) {
      bool all = true;
      for (std::uint32_t corner = 0; corner < (1u << d) && all; ++corner) {
        IntVec x(d);
        for (int c = 0; c < d; ++c) x[c] = base[c] + ((corner >> c) & 1);
        all = oracle_cconv(s, x);
      }
      if (all) ++total;
      int c = 0;
      while (c < d && base[c] == hi[c] - 1) ++c;
      if (c == d) break;
      ++base[c];
      for (int b = 0; b < c; ++b) base[b] = lo[b];
    }
  }
  return total;
}

bool is_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j.contains("points");
}

struct CliOptions {
  // shared
  std::string in_path, out_path, cfg_path, corpus_dir, format = "json";
  bool oracle = false;
  std::uint64_t seed = 0x5EED;
  bool seed_given = false;
  // gen
  std::string family;
  int n = 2, m = 8;
  double density = 0.5;
  long long grid_max = 3;
  std::string bounds_text, lengths_text, scale_text = "1", proj_text, keep_text;
  std::string p_text = "2", t_text;
  bool symmetric = false;
  // verify
  std::string claim, dim_kind;
  int k = 0, m_param = 0, slice_coord = 0, trials = 100;
  double eps = 0, c_try = 0, threshold = 0, tol = 0;
  bool boxes_mode = false;
};

ConstantsConfig config_from(const CliOptions& opt) {
  ConstantsConfig cfg;
  if (!opt.cfg_path.empty()) cfg = load_config(opt.cfg_path);
  // An explicit --seed wins; otherwise a config file's seed stands.
  if (opt.seed_given || opt.cfg_path.empty()) cfg.mc_seed = opt.seed;
  return cfg;
}

VerifyParams params_from(const CliOptions& opt) {
  VerifyParams p;
  if (opt.k > 0) p.k = opt.k;
  if (opt.m_param > 0) p.m = opt.m_param;
  if (!opt.p_text.empty() && opt.p_text != "2") p.p = parse_p(opt.p_text);
  if (opt.eps > 0) p.eps = opt.eps;
  if (opt.c_try > 0) p.c_try = opt.c_try;
  if (opt.slice_coord > 0) p.slice_coord = opt.slice_coord;
  if (opt.threshold > 0) p.threshold = opt.threshold;
  if (!opt.bounds_text.empty())
    for (int b : parse_index_list(opt.bounds_text)) p.box_bounds.push_back(b);
  p.trials = opt.trials;
  p.seed = opt.seed;
  return p;
}

void emit_report(const VerificationReport& report, const CliOptions& opt,
                 const RunManifest& manifest, std::ostream& out) {
  std::string text;
  if (opt.format == "csv")
    text = report_csv_header() + "\n" + report_to_csv_row(report) + "\n";
  else
    text = report_to_json(report, manifest);
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw input_error("cannot write file: " + opt.out_path);
    f << text;
    out << (report.pass ? "pass" : "FAIL") << " " << report.claim << " -> " << opt.out_path
        << "\n";
  }
}

int cmd_gen(const CliOptions& opt, std::ostream& out) {
  GenSpec spec;
  spec.family = opt.family;
  spec.seed = opt.seed;
  spec.n = opt.n;
  spec.m = opt.m;
  spec.density = opt.density;
  spec.grid_max = opt.grid_max;
  spec.symmetric = opt.symmetric;
  spec.scale = parse_rational(opt.scale_text);
  spec.p = parse_p(opt.p_text);
  if (!opt.bounds_text.empty())
    for (int b : parse_index_list(opt.bounds_text)) spec.box_bounds.push_back(b);
  if (!opt.lengths_text.empty()) {
    std::stringstream ss(opt.lengths_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.lengths.push_back(parse_rational(tok));
  }

  static const std::set<std::string> discrete{"boolean_random", "box_random", "diagonal",
                                              "full_grid"};
  if (discrete.count(spec.family)) {
    IntegerPointSet a = gen_discrete(spec);
    if (opt.out_path.empty()) {
      out << point_set_to_json(a);
    } else {
      save_point_set(a, opt.out_path);
      out << "wrote " << opt.out_path << " digest " << digest_point_set(a) << "\n";
    }
  } else {
    RationalPolytope k = gen_polytope(spec);
    if (opt.out_path.empty()) {
      out << polytope_to_json(k);
    } else {
      save_polytope(k, opt.out_path);
      out << "wrote " << opt.out_path << " digest " << digest_polytope(k) << "\n";
    }
  }
  return 0;
}

int cmd_cells(const CliOptions& opt, std::ostream& out) {
  RationalPolytope body = load_polytope(opt.in_path);
  if (!opt.proj_text.empty()) {
    IndexSet coords(body.dim(), parse_index_list(opt.proj_text));
    const long long count =
        static_cast<long long>(count_integer_cells_body(body, coords).size());
    if (opt.oracle) {
      const long long reference = exhaustive_cell_count(body, coords);
      if (reference != count) {
        out << "ORACLE MISMATCH: main " << count << " oracle " << reference << "\n";
        return 1;
      }
      out << count << " (oracle agrees)\n";
    } else {
      out << count << "\n";
    }
    return 0;
  }
  BestProjection best = best_cell_projection(body);
  out << best.coords.to_string() << " " << best.cells << " (vol(K/6) = "
      << rational_to_string(best.sixth_volume) << ", vol(K/4) - 2^-n = "
      << rational_to_string(best.quarter_bound) << ")\n";
  return 0;
}

int cmd_boxes(const CliOptions& opt, std::ostream& out) {
  IntegerPointSet a = load_point_set(opt.in_path);
  IndexSet coords = opt.proj_text.empty() ? IndexSet::full(a.dim())
                                          : IndexSet(a.dim(), parse_index_list(opt.proj_text));
  out << integer_boxes_in(a, coords) << "\n";
  return 0;
}

int cmd_content(const CliOptions& opt, std::ostream& out) {
  IntegerPointSet a = load_point_set(opt.in_path);
  const long long value = opt.boxes_mode ? box_content(a) : cell_content(a);
  if (opt.oracle && !opt.boxes_mode) {
    const long long reference = oracle_cell_content(a);
    if (reference != value) {
      out << "ORACLE MISMATCH: main " << value << " oracle " << reference << "\n";
      return 1;
    }
    out << value << " (oracle agrees)\n";
  } else {
    out << value << "\n";
  }
  return 0;
}

int cmd_dim(const CliOptions& opt, std::ostream& out) {
  if (opt.dim_kind == "comb" && !is_point_set_file(opt.in_path)) {
    RationalPolytope body = load_polytope(opt.in_path);
    if (opt.t_text.empty()) throw input_error("comb dimension needs --t");
    out << comb_dimension_body(body, parse_rational(opt.t_text)) << "\n";
    return 0;
  }
  IntegerPointSet a = load_point_set(opt.in_path);
  if (opt.dim_kind == "vc") {
    out << vc_dimension(a) << "\n";
  } else if (opt.dim_kind == "natarajan") {
    out << natarajan_dimension(a) << "\n";
  } else if (opt.dim_kind == "comb") {
    if (opt.t_text.empty()) throw input_error("comb dimension needs --t");
    const Rat t = parse_rational(opt.t_text);
    ShatterResult res = shattering_dimension_discrete(a, t);
    if (opt.oracle) {
      const Rat step = std::min(t / 4, Rat(1) / 4);
      const int reference = grid_shatter_search(a, t, step);
      if (reference != res.dimension) {
        out << "ORACLE MISMATCH: main " << res.dimension << " oracle " << reference << "\n";
        return 1;
      }
    }
    out << res.dimension;
    if (res.witness) out << " witness " << res.witness->indices.to_string();
    out << "\n";
  } else {
    throw input_error("dimension kind must be vc, natarajan, or comb");
  }
  return 0;
}

int cmd_volume(const CliOptions& opt, std::ostream& out) {
  RationalPolytope body = load_polytope(opt.in_path);
  const Rat vol = body.volume();
  if (opt.oracle) {
    ConstantsConfig cfg = config_from(opt);
    McEstimate est = mc_volume(body, cfg);
    const double exact = to_double(vol);
    const double deviation = std::abs(est.value - exact);
    out << rational_to_string(vol) << " (mc " << est.value << " +- " << est.half_width_95
        << ")\n";
    if (deviation > 3.0 * est.half_width_95 && !est.zero_hits) return 1;
    return 0;
  }
  out << rational_to_string(vol) << "\n";
  return 0;
}

int cmd_transform(const CliOptions& opt, const std::string& which, std::ostream& out) {
  RationalPolytope body = load_polytope(opt.in_path);
  RationalPolytope result = RationalPolytope::empty(body.dim());
  if (which == "project") {
    IndexSet coords(body.dim(), parse_index_list(opt.proj_text));
    result = body.project_onto(coords);
  } else if (which == "section") {
    IndexSet kept(body.dim(), parse_index_list(opt.keep_text));
    result = body.section(kept);
    if (result.is_empty()) out << "warning: empty section\n";
  } else {
    result = body.polar();
  }
  if (opt.out_path.empty()) {
    out << polytope_to_json(result);
  } else {
    save_polytope(result, opt.out_path);
    out << "wrote " << opt.out_path << " digest " << digest_polytope(result) << "\n";
  }
  return 0;
}

int cmd_verify(const CliOptions& opt, const RunManifest& base_manifest, std::ostream& out) {
  ConstantsConfig cfg = config_from(opt);
  VerifyParams params = params_from(opt);
  params.seed = cfg.mc_seed;
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  if (is_discrete_claim(opt.claim)) {
    report = verify_discrete(opt.claim, load_point_set(opt.in_path), params);
  } else if (is_convex_claim(opt.claim)) {
    if (opt.claim == "LEM_4_2") {
      report = verify_convex(opt.claim, RationalPolytope::empty(1), params, cfg);
    } else {
      report = verify_convex(opt.claim, load_polytope(opt.in_path), params, cfg);
    }
  } else {
    throw input_error("unknown claim: " + opt.claim);
  }

  if (opt.oracle && opt.claim == "THM_2_4") {
    IntegerPointSet a = load_point_set(opt.in_path);
    const long long reference = oracle_cell_content(a);
    if (report.rhs_exact && Rat(reference) != *report.rhs_exact)
      throw precondition_error("oracle disagrees with cell content");
    report.notes += "; oracle cell content agrees";
  }
  if (opt.tol > 0 && report.ci_half_width && *report.ci_half_width > opt.tol)
    report.notes += "; requested tolerance " + std::to_string(opt.tol) +
                    " not met by CI half-width";

  RunManifest manifest = base_manifest;
  manifest.seed = cfg.mc_seed;
  manifest.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  emit_report(report, opt, manifest, out);
  return report.pass ? 0 : 1;
}

int cmd_sweep(const CliOptions& opt, const RunManifest& base_manifest, std::ostream& out) {
  ConstantsConfig cfg = config_from(opt);
  VerifyParams params = params_from(opt);
  std::vector<RationalPolytope> corpus;
  if (!opt.corpus_dir.empty()) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(opt.corpus_dir))
      if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) corpus.push_back(load_polytope(path));
  }
  const auto start = std::chrono::steady_clock::now();
  SweepResult result = sweep_claim(opt.claim, corpus, params, cfg);
  RunManifest manifest = base_manifest;
  manifest.seed = cfg.mc_seed;
  manifest.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();

  nlohmann::ordered_json j;
  j["claim"] = result.claim;
  j["measured"] = result.measured;
  j["description"] = result.description;
  j["corpus_size"] = corpus.size();
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& r : result.reports) {
    reports.push_back(nlohmann::ordered_json::parse(report_to_json(r, manifest)));
    all_pass = all_pass && r.pass;
  }
  j["reports"] = std::move(reports);
  const std::string text = j.dump(2) + "\n";
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw input_error("cannot write file: " + opt.out_path);
    f << text;
    out << "measured " << result.measured << " -> " << opt.out_path << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_report(const CliOptions& opt, std::ostream& out) {
  std::ifstream in(opt.in_path);
  if (!in) throw input_error("cannot open file: " + opt.in_path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed report: ") + e.what());
  }
  auto render = [](const nlohmann::ordered_json& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.value("claim", "") << "," << r.value("lhs", 0.0) << "," << r.value("rhs", 0.0)
       << "," << r.value("lhs_exact", "") << "," << r.value("rhs_exact", "") << ","
       << (r.value("pass", false) ? "true" : "false") << ",\"" << r.value("witness", "")
       << "\",";
    if (r.contains("measured_constant")) os << r["measured_constant"].get<double>();
    os << "," << r.value("provenance", "") << ",";
    if (r.contains("ci_half_width")) os << r["ci_half_width"].get<double>();
    return os.str();
  };
  std::ostringstream os;
  os << report_csv_header() << "\n";
  if (j.contains("reports")) {
    for (const auto& r : j["reports"]) os << render(r) << "\n";
  } else {
    os << render(j) << "\n";
  }
  if (opt.out_path.empty()) {
    out << os.str();
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw input_error("cannot write file: " + opt.out_path);
    f << os.str();
    out << "wrote " << opt.out_path << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice-cell and coordinate-section toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  CliOptions opt;

  auto add_io = [&opt](CLI::App* cmd, bool needs_in) {
    auto* in = cmd->add_option("--in", opt.in_path, "input instance file");
    if (needs_in) in->required();
    cmd->add_option("--out", opt.out_path, "output file");
    cmd->add_option("--seed", opt.seed, "random seed")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    cmd->add_option("--cfg", opt.cfg_path, "constants config (JSON)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--oracle", opt.oracle, "cross-check through the oracle path");
    cmd->add_option("--tol", opt.tol, "requested tolerance for MC paths");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--family", opt.family, "instance family")->required();
  gen->add_option("--n", opt.n, "dimension");
  gen->add_option("--m", opt.m, "hull point count");
  gen->add_option("--density", opt.density, "inclusion probability");
  gen->add_option("--grid-max", opt.grid_max, "grid bound M");
  gen->add_option("--bounds", opt.bounds_text, "per-coordinate bounds, comma separated");
  gen->add_option("--lengths", opt.lengths_text, "edge lengths / semiaxes, comma separated");
  gen->add_option("--scale", opt.scale_text, "scale (rational)");
  gen->add_option("--p", opt.p_text, "L_p parameter (number or inf)");
  gen->add_flag("--symmetric", opt.symmetric, "close random hulls under negation");
  add_io(gen, false);

  CLI::App* cells = app.add_subcommand("cells", "integer cells in a body projection");
  cells->add_option("--proj", opt.proj_text, "projection coordinates, comma separated");
  add_io(cells, true);

  CLI::App* boxes = app.add_subcommand("boxes", "integer boxes in a point-set projection");
  boxes->add_option("--proj", opt.proj_text, "projection coordinates");
  add_io(boxes, true);

  CLI::App* content = app.add_subcommand("content", "cell content of a point set");
  content->add_flag("--boxes", opt.boxes_mode, "box content instead of cell content");
  add_io(content, true);

  CLI::App* dim = app.add_subcommand("dim", "discrete or body dimension");
  dim->add_option("kind", opt.dim_kind, "vc | natarajan | comb")->required();
  dim->add_option("--t", opt.t_text, "scale t (rational)");
  add_io(dim, true);

  CLI::App* volume = app.add_subcommand("volume", "exact volume");
  add_io(volume, true);

  CLI::App* project = app.add_subcommand("project", "coordinate projection");
  project->add_option("--proj", opt.proj_text, "projection coordinates")->required();
  add_io(project, true);

  CLI::App* section = app.add_subcommand("section", "coordinate section");
  section->add_option("--keep", opt.keep_text, "kept coordinates")->required();
  add_io(section, true);

  CLI::App* polar = app.add_subcommand("polar", "polar body");
  add_io(polar, true);

  CLI::App* verify = app.add_subcommand("verify", "verify a claim on an instance");
  verify->add_option("claim", opt.claim, "claim id")->required();
  verify->add_option("--k", opt.k, "codimension / rank parameter");
  verify->add_option("--m", opt.m_param, "second rank parameter");
  verify->add_option("--p", opt.p_text, "L_p parameter (number or inf)");
  verify->add_option("--eps", opt.eps, "proportion parameter");
  verify->add_option("--c-try", opt.c_try, "constant to test");
  verify->add_option("--slice", opt.slice_coord, "slicing coordinate");
  verify->add_option("--bounds", opt.bounds_text, "box bounds for HL claims");
  verify->add_option("--threshold", opt.threshold, "ratio threshold");
  verify->add_option("--trials", opt.trials, "translate trials");
  add_io(verify, true);
  verify->get_option("--in")->required(false);

  CLI::App* sweep = app.add_subcommand("sweep", "measure a claim's constant over a corpus");
  sweep->add_option("claim", opt.claim, "claim id")->required();
  sweep->add_option("--corpus", opt.corpus_dir, "directory of instance files");
  sweep->add_option("--k", opt.k, "rank parameter");
  sweep->add_option("--m", opt.m_param, "second rank parameter");
  sweep->add_option("--p", opt.p_text, "L_p parameter");
  sweep->add_option("--eps", opt.eps, "proportion parameter");
  sweep->add_option("--c-try", opt.c_try, "constant to test");
  add_io(sweep, false);

  CLI::App* report = app.add_subcommand("report", "re-render a report file");
  add_io(report, true);

  std::vector<const char*> argv;
  argv.push_back("latcell");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  RunManifest manifest;
  manifest.command_line = "latcell";
  for (const auto& a : args) manifest.command_line += " " + a;
  manifest.seed = opt.seed;
  manifest.tool_version = kToolVersion;
  if (opt.cfg_path.empty()) {
    manifest.config_digest = "default";
  } else {
    std::ifstream cfg_file(opt.cfg_path);
    std::stringstream cfg_text;
    cfg_text << cfg_file.rdbuf();
    manifest.config_digest = digest_string(cfg_text.str());
  }

  try {
    if (gen->parsed()) return cmd_gen(opt, out);
    if (cells->parsed()) return cmd_cells(opt, out);
    if (boxes->parsed()) return cmd_boxes(opt, out);
    if (content->parsed()) return cmd_content(opt, out);
    if (dim->parsed()) return cmd_dim(opt, out);
    if (volume->parsed()) return cmd_volume(opt, out);
    if (project->parsed()) return cmd_transform(opt, "project", out);
    if (section->parsed()) return cmd_transform(opt, "section", out);
    if (polar->parsed()) return cmd_transform(opt, "polar", out);
    if (verify->parsed()) {
      if (opt.claim != "LEM_4_2" && opt.in_path.empty())
        throw input_error("verify needs --in (LEM_4_2 excepted)");
      return cmd_verify(opt, manifest, out);
    }
    if (sweep->parsed()) return cmd_sweep(opt, manifest, out);
    if (report->parsed()) return cmd_report(opt, out);
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace latcell

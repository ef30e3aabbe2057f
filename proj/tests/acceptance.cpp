// Acceptance suite: one pass/fail line per criterion, exact tolerances pinned
// in code. Measured constants are compared against the regression goldens in
// tests/data/goldens.json (regenerate with --write-goldens after a deliberate
// change).
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <cstdlib>
#include <vector>

#include <json.hpp>

#include "latcell/body_cells.hpp"
#include "latcell/duality.hpp"
#include "latcell/generators.hpp"
#include "latcell/io.hpp"
#include "latcell/oracles.hpp"
#include "latcell/verify.hpp"

using namespace latcell;
using json = nlohmann::ordered_json;

namespace {

#ifndef LATCELL_TEST_DATA_DIR
#define LATCELL_TEST_DATA_DIR "tests/data"
#endif

const std::string kDataDir = LATCELL_TEST_DATA_DIR;

bool g_write_goldens = false;
json g_goldens;
json g_new_goldens;

bool golden_close(const std::string& key, double measured, double rel_tol) {
  g_new_goldens[key] = measured;
  if (g_write_goldens) return true;
  if (!g_goldens.contains(key)) {
    std::cout << "    missing golden '" << key << "' (measured " << measured << ")\n";
    return false;
  }
  const double want = g_goldens[key].get<double>();
  const double scale = std::max({std::abs(want), std::abs(measured), 1e-300});
  if (std::abs(want - measured) / scale > rel_tol) {
    std::cout << "    golden '" << key << "': measured " << measured << " vs recorded "
              << want << "\n";
    return false;
  }
  return true;
}

IntegerPointSet random_box_set(std::uint64_t seed, int n, long long bound, double density) {
  GenSpec spec;
  spec.family = "box_random";
  spec.seed = seed;
  spec.n = n;
  spec.box_bounds.assign(n, bound);
  spec.density = density;
  return gen_discrete(spec);
}

RationalPolytope symmetric_hull(std::uint64_t seed, int n, int m, long long scale) {
  // Deterministically retries until full-dimensional with interior origin.
  for (std::uint64_t s = seed;; ++s) {
    GenSpec spec;
    spec.family = "random_hull";
    spec.seed = s;
    spec.n = n;
    spec.m = m;
    spec.scale = Rat(scale);
    spec.symmetric = true;
    auto body = gen_polytope(spec);
    if (body.full_dimensional() && body.origin_interior()) return body;
  }
}

RationalPolytope plain_hull(std::uint64_t seed, int n, int m, long long scale) {
  for (std::uint64_t s = seed;; ++s) {
    GenSpec spec;
    spec.family = "random_hull";
    spec.seed = s;
    spec.n = n;
    spec.m = m;
    spec.scale = Rat(scale);
    auto body = gen_polytope(spec);
    if (body.full_dimensional()) return body;
  }
}

Rat rat_pow(const Rat& x, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// ---------------------------------------------------------------- criterion 1
bool c1_content_bounds() {
  const auto start = std::chrono::steady_clock::now();
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  long long violations = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    auto a = random_box_set(1000 + i, n, 4, densities[i % 5]);
    const long long sz = static_cast<long long>(a.size());
    if (sz > cell_content(a)) ++violations;
    if (sz > 1 + box_content(a)) ++violations;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "    500 sets, " << violations << " violations, " << secs << " s\n";
  return violations == 0 && secs < 60.0;
}

// ---------------------------------------------------------------- criterion 2
bool c2_slicing_superadditivity() {
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    auto a = random_box_set(1000 + i, n, 4, densities[i % 5]);
    if (a.empty()) continue;
    for (int j = 1; j <= n; ++j) {
      VerifyParams params;
      params.slice_coord = j;
      if (!verify_discrete("LEM_2_7", a, params).pass) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 3
bool c3_sauer_shelah_pajor() {
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + i % 9;
    GenSpec spec;
    spec.family = "boolean_random";
    spec.seed = 2000 + i;
    spec.n = n;
    spec.density = 0.15 + 0.08 * (i % 10);
    auto a = gen_discrete(spec);
    if (a.empty()) continue;
    if (!verify_discrete("PAJOR_1", a, {}).pass) return false;
    if (!verify_discrete("SAUER_SHELAH", a, {}).pass) return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 4
bool c4_haussler_long() {
  std::mt19937_64 bounds_rng(4242);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 4;
    GenSpec spec;
    spec.family = "box_random";
    spec.seed = 3000 + i;
    spec.n = n;
    for (int c = 0; c < n; ++c)
      spec.box_bounds.push_back(1 + static_cast<long long>(bounds_rng() % 4));
    spec.density = 0.25 + 0.15 * (i % 5);
    auto a = gen_discrete(spec);
    if (a.empty()) continue;
    for (const char* claim : {"HL_I", "HL_II", "HL_III"})
      if (!verify_discrete(claim, a, {}).pass) return false;
  }
  // Equality case: the full grid {0,1,2}^3 meets the binomial bound exactly.
  GenSpec grid;
  grid.family = "full_grid";
  grid.n = 3;
  grid.grid_max = 2;
  auto r = verify_discrete("HL_II", gen_discrete(grid), {});
  if (!(r.pass && *r.lhs_exact == 27 && *r.rhs_exact == 27)) return false;
  std::cout << "    200 mixed boxes pass; equality 27 = 27 on the full grid\n";
  return true;
}

// ---------------------------------------------------------------- criterion 5
bool c5_cube_counts() {
  for (int n = 1; n <= 3; ++n) {
    for (long long m = 1; m <= 4; ++m) {
      GenSpec spec;
      spec.family = "full_grid";
      spec.n = n;
      spec.grid_max = m;
      auto grid = gen_discrete(spec);
      long long cells = 1, boxes = 1;
      for (int c = 0; c < n; ++c) {
        cells *= m;
        boxes *= m * (m + 1) / 2;
      }
      if (static_cast<long long>(integer_cells_in_cconv(grid, IndexSet::full(n)).size()) !=
          cells)
        return false;
      if (integer_boxes_in(grid, IndexSet::full(n)) != boxes) return false;

      GenSpec box;
      box.family = "pancake";
      box.n = n;
      box.lengths.assign(n, Rat(m));
      auto body = gen_polytope(box);
      if (static_cast<long long>(count_integer_cells_body(body, IndexSet::full(n)).size()) !=
          cells)
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 6
bool c6_cell_projection_bounds() {
  int made = 0;
  Rat worst_margin;
  bool first = true;
  const int plan[][2] = {{2, 30}, {3, 30}, {4, 25}, {5, 15}};
  for (const auto& [n, count] : plan) {
    for (int i = 0; i < count; ++i) {
      auto body = plain_hull(5000 + 97 * made, n, 2 * n + 4, 2);
      // Scale by the smallest quarter-integer making vol(K/6) >= 1.
      const Rat v = body.volume();
      const Rat six_n = rat_pow(Rat(6), n);
      Rat s = Rat(std::max<long long>(
                  1, static_cast<long long>(std::ceil(
                         4.0 * std::pow(to_double(six_n / v), 1.0 / n))))) /
              4;
      while (rat_pow(s, n) * v < six_n) s += Rat(1) / 4;
      body = body.scale(s);
      ++made;

      const Rat vol = body.volume();
      const Rat sixth = vol / six_n;
      const Rat quarter = vol / rat_pow(Rat(4), n) - Rat(1) / rat_pow(Rat(2), n);
      if (sixth < 1) return false;
      BestProjection best = best_cell_projection(body);
      if (!(Rat(best.cells) >= quarter && quarter >= sixth)) {
        std::cout << "    violation at body " << made - 1 << "\n";
        return false;
      }
      const Rat margin = Rat(best.cells) - quarter;
      if (first || margin < worst_margin) {
        worst_margin = margin;
        first = false;
      }
    }
  }
  std::cout << "    " << made << " scaled bodies, worst margin "
            << to_double(worst_margin) << "\n";
  return made == 100;
}

// ---------------------------------------------------------------- criterion 7
bool c7_translate_bound() {
  std::mt19937_64 rng(777);
  int checks = 0;
  for (int b = 0; b < 20; ++b) {
    const int n = 2 + b % 3;
    auto body = plain_hull(6000 + 31 * b, n, 2 * n + 3, 2);
    const long long doubled =
        static_cast<long long>(lattice_cell_bases(body.scale(Rat(2))).size());
    for (int t = 0; t < 5; ++t) {
      RatVec x(n);
      for (int c = 0; c < n; ++c)
        x[c] = Rat(static_cast<long long>(rng() % 65) - 32) / 16;
      const long long cells =
          static_cast<long long>(lattice_cell_bases(body.translate(x)).size());
      if (cells > doubled) return false;
      ++checks;
    }
  }
  std::cout << "    " << checks << " translate comparisons\n";
  return checks == 100;
}

// ---------------------------------------------------------------- criterion 8
bool c8_ball_volumes() {
  // Exact equality for p in {1, inf}.
  for (int k = 1; k <= 6; ++k) {
    if (lp_ball_volume_exact(1.0, k) != lp_ball_polytope(1.0, k).volume()) return false;
    if (lp_ball_volume_exact(kInfinity, k) != lp_ball_polytope(kInfinity, k).volume())
      return false;
    const double closed = lp_ball_volume(1.0, k);
    if (std::abs(closed - to_double(lp_ball_volume_exact(1.0, k))) > 1e-9 * closed)
      return false;
  }
  // Monte Carlo agreement within 2% relative for p in {3/2, 2, 4}.
  ConstantsConfig cfg;
  cfg.mc_samples = 2000000;
  double worst_rel = 0;
  for (double p : {1.5, 2.0, 4.0}) {
    for (int k = 1; k <= 6; ++k) {
      const LpBallSpec ball{p, k};
      auto box = ball.bounding_box();
      auto est = mc_volume(
          [&ball](const std::vector<double>& x) { return ball.contains(x); },
          box.first, box.second, cfg);
      const double closed = lp_ball_volume(p, k);
      const double rel = std::abs(est.value - closed) / closed;
      worst_rel = std::max(worst_rel, rel);
      if (rel > 0.02) {
        std::cout << "    p=" << p << " k=" << k << " rel error " << rel << "\n";
        return false;
      }
    }
  }
  // Monotonicity sweep: the measured maximum ratio is a regression golden.
  auto sweep = sweep_claim("LEM_4_2", {}, {}, cfg);
  std::cout << "    worst MC rel error " << worst_rel << ", max w_p(k)/w_p(n) "
            << sweep.measured << "\n";
  if (sweep.measured > 10.0) return false;
  return golden_close("lem42_max_ratio", sweep.measured, 1e-9);
}

// Shared corpus for criteria 9 and 10.
std::vector<RationalPolytope> volume_ratio_corpus() {
  std::vector<RationalPolytope> corpus;
  const int plan[][2] = {{2, 13}, {3, 13}, {4, 13}, {5, 11}};
  int made = 0;
  for (const auto& [n, count] : plan)
    for (int i = 0; i < count; ++i)
      corpus.push_back(symmetric_hull(7000 + 53 * made++, n, 3 * n, 3));
  return corpus;
}

// ---------------------------------------------------------------- criterion 9
bool c9_cube_scale_theorem(const std::vector<RationalPolytope>& corpus) {
  const Rat c = Rat(1) / 4;
  int checks = 0;
  for (const auto& body : corpus) {
    const int n = body.dim();
    const Rat vol = body.volume();
    const Rat c_n = rat_pow(c, n);
    CubeSideProfile prof = cube_side_profile(body);
    // Projection volumes once per subspace; reused across every k.
    std::vector<std::pair<int, Rat>> proj_terms;  // (codim, volume)
    for (const auto& kept : IndexSet::all_nonempty(n)) {
      if (kept.size() == n) continue;
      proj_terms.emplace_back(n - kept.size(), body.project_onto(kept).volume());
    }
    for (int k = 1; k < n; ++k) {
      const Rat side = prof.max_by_rank[n - k - 1];
      bool ok = false;
      for (const auto& [codim, pvol] : proj_terms) {
        if (codim < k || pvol == 0) continue;
        if (rat_pow(side, codim) * pvol >= c_n * vol) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        std::cout << "    violation: n=" << n << " k=" << k << "\n";
        return false;
      }
      ++checks;
    }
  }
  // Integration path: the packaged verifier agrees on a sample.
  ConstantsConfig cfg;
  for (std::size_t i = 0; i < corpus.size(); i += 7)
    if (!verify_convex("THM_3_4", corpus[i], {}, cfg).pass) return false;
  std::cout << "    " << corpus.size() << " bodies, " << checks << " (body, k) checks\n";
  return true;
}

// --------------------------------------------------------------- criterion 10
bool c10_section_ratio_sweeps(const std::vector<RationalPolytope>& corpus) {
  ConstantsConfig cfg;
  auto s31 = sweep_claim("THM_3_1", corpus, {}, cfg);
  for (const auto& r : s31.reports)
    if (!r.pass) return false;
  auto s35 = sweep_claim("LEM_3_5", corpus, {}, cfg);
  for (const auto& r : s35.reports)
    if (!r.pass) return false;
  std::cout << "    smallest sufficient C (sections) " << s31.measured
            << ", matched-product C " << s35.measured << "\n";
  bool ok = golden_close("thm31_C_required", s31.measured, 1e-9);
  ok = golden_close("lem35_C_required", s35.measured, 1e-9) && ok;
  return ok;
}

// --------------------------------------------------------------- criterion 11
bool c11_section_polar_duality() {
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 3;
    auto body = symmetric_hull(8000 + 13 * i, n, 3 * n, 3);
    auto r = verify_convex("SECTION_POLAR", body, {}, {});
    if (!r.pass) {
      std::cout << "    mismatch at body " << i << ": " << r.witness << "\n";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 12
bool c12_volume_product() {
  double reverse_min = kInfinity;
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 3;
    auto body = symmetric_hull(9000 + 29 * i, n, 3 * n, 3);
    auto r = verify_convex("SANTALO", body, {}, {});
    if (!r.pass) return false;
    reverse_min = std::min(reverse_min, r.measured_constant.value());
  }
  std::cout << "    reverse product constant (min over corpus) " << reverse_min << "\n";
  return golden_close("santalo_reverse_min", reverse_min, 1e-9);
}

// --------------------------------------------------------------- criterion 13
bool c13_cube_scale_law() {
  // Corpus: symmetric hulls of lattice points rejection-sampled inside B_p^n
  // (exact membership per point; the hull stays inside by convexity).
  std::vector<std::pair<RationalPolytope, double>> corpus;
  int made = 0;
  for (double p : {1.0, 2.0, kInfinity}) {
    for (int i = 0; i < 10; ++i) {
      const int n = 2 + (made % 4);
      std::mt19937_64 rng(11000 + 17 * made);
      for (;;) {
        std::vector<RatVec> pts;
        const long long cap = p == kInfinity ? 8 : 8 * n;
        while (static_cast<int>(pts.size()) < 3 * n) {
          RatVec v(n);
          Rat l1 = 0, l2 = 0, linf = 0;
          for (int c = 0; c < n; ++c) {
            v[c] = Rat(static_cast<long long>(rng() % (2 * cap + 1)) - cap) / 8;
            Rat a = v[c] < 0 ? -v[c] : v[c];
            l1 += a;
            l2 += a * a;
            linf = std::max(linf, a);
          }
          const bool inside = p == 1.0 ? l1 <= n : (p == 2.0 ? l2 <= n : linf <= 1);
          if (!inside) continue;
          RatVec neg(n);
          for (int c = 0; c < n; ++c) neg[c] = -v[c];
          pts.push_back(std::move(v));
          pts.push_back(std::move(neg));
        }
        auto body = RationalPolytope::from_points(n, std::move(pts));
        if (!body.full_dimensional() || !body.origin_interior()) continue;
        corpus.emplace_back(std::move(body), p);
        break;
      }
      ++made;
    }
  }

  // Largest corpus-safe c, fully deterministic (exact or analytic mu).
  ConstantsConfig cfg;
  double c_opt = kInfinity;
  for (const auto& [body, p] : corpus) {
    const int n = body.dim();
    VolumeFraction mu = ball_volume_fraction(body, p, cfg);
    CubeSideProfile prof = cube_side_profile(body);
    for (int k = 1; k < n; ++k) {
      const double denom = (static_cast<double>(k) / n) * std::pow(mu.value, 1.0 / k);
      c_opt = std::min(c_opt, to_double(prof.max_by_rank[n - k - 1]) / denom);
    }
  }
  std::cout << "    " << corpus.size() << " bodies; measured optimum c " << c_opt << "\n";
  if (c_opt < 0.01) {
    std::cout << "    conservative floor 0.01 violated\n";
    return false;
  }
  bool ok = golden_close("thm41_c_opt", c_opt, 1e-6);

  // Sharpness body at (n, k, p) = (6, 3, 2), eps = 1/10.
  auto sharp = gen_sharpness_body(6, 3, 2.0, Rat(1) / 10);
  const double eps = 0.1;
  std::mt19937_64 rng(0x5EED);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double radius = std::sqrt(6.0);
  // Sample inside the small-coordinate cylinders so hits are plentiful, then
  // check the forced-small-coordinate property on every rank-4 projection.
  auto subsets4 = IndexSet::of_size(6, 4);
  int sampled = 0;
  for (int s = 0; s < 200000 && sampled < 20000; ++s) {
    std::vector<double> x(6);
    std::vector<int> small_idx{0, 1, 2, 3, 4, 5};
    for (int c = 0; c < 3; ++c)
      std::swap(small_idx[c], small_idx[c + rng() % (6 - c)]);
    small_idx.resize(3);
    for (int c = 0; c < 6; ++c) x[c] = (2.0 * unit() - 1.0) * radius;
    for (int c : small_idx) x[c] = (2.0 * unit() - 1.0) * eps;
    if (!sharp.contains(x)) continue;
    ++sampled;
    for (const auto& coords : subsets4) {
      double smallest = kInfinity;
      for (int idx : coords.indices()) smallest = std::min(smallest, std::abs(x[idx - 1]));
      if (smallest > eps + 1e-12) {
        std::cout << "    rank-4 projection point with no small coordinate\n";
        return false;
      }
    }
  }
  if (sampled < 5000) {
    std::cout << "    sharpness sampling starved (" << sampled << ")\n";
    return false;
  }

  // Monte Carlo mu_2 against the binomial lower-bound shape with c = 1/4.
  ConstantsConfig mc_cfg;
  mc_cfg.mc_samples = 1000000;
  auto box = sharp.bounding_box();
  auto est = mc_volume([&sharp](const std::vector<double>& x) { return sharp.contains(x); },
                       box.first, box.second, mc_cfg);
  const double mu_hat = est.value / lp_ball_volume(2.0, 6);
  const double mu_hw = est.half_width_95 / lp_ball_volume(2.0, 6);
  const double shape = 20.0 * std::pow(0.25 * eps, 3.0);  // C(6,3) (c eps)^k
  std::cout << "    sampled " << sampled << " body points; mu_2 = " << mu_hat << " +- "
            << mu_hw << ", shape bound " << shape << "\n";
  if (mu_hat + mu_hw < shape) return false;
  return ok;
}

// --------------------------------------------------------------- criterion 14
bool c14_duality_experiments() {
  std::vector<RationalPolytope> corpus;
  corpus.push_back(lp_ball_polytope(kInfinity, 6));
  corpus.push_back(lp_ball_polytope(1.0, 6));
  for (int i = 0; i < 20; ++i) corpus.push_back(symmetric_hull(12000 + 7 * i, 6, 12, 2));

  double max_product = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto ex = section_duality_experiment(corpus[i], 2, 2, 1.0 / 3, 2.0);
    if (ex.case_taken != 1 && ex.case_taken != 2) return false;
    if (ex.witness.size() != 2) return false;
    max_product = std::max(max_product, to_double(ex.product));

    // Scale invariance of the product, exact.
    auto ex2 = section_duality_experiment(corpus[i].scale(Rat(2)), 2, 2, 1.0 / 3, 2.0);
    if (ex2.product != ex.product) {
      std::cout << "    product not scale invariant at body " << i << "\n";
      return false;
    }
  }
  std::cout << "    22 experiments; max product r_k r_m = " << max_product << "\n";
  return golden_close("thm51_max_product", max_product, 1e-9);
}

struct Criterion {
  int id;
  std::string label;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--write-goldens") g_write_goldens = true;
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }

  const std::string golden_path = kDataDir + "/goldens.json";
  if (!g_write_goldens) {
    std::ifstream f(golden_path);
    if (f) {
      try {
        f >> g_goldens;
      } catch (...) {
        std::cout << "cannot parse goldens file " << golden_path << "\n";
      }
    }
  }

  auto corpus = volume_ratio_corpus();

  std::vector<Criterion> criteria{
      {1, "content bounds on 500 random sets (exact, < 60 s)", c1_content_bounds},
      {2, "slicing superadditivity along every coordinate", c2_slicing_superadditivity},
      {3, "boolean projection estimate and binomial contrapositive",
       c3_sauer_shelah_pajor},
      {4, "mixed-box dimension bounds with grid equality", c4_haussler_long},
      {5, "cube cell and box counts", c5_cube_counts},
      {6, "best projection beats the volume bounds", c6_cell_projection_bounds},
      {7, "translate cell bound", c7_translate_bound},
      {8, "ball volumes: closed form, MC, monotonicity sweep", c8_ball_volumes},
      {9, "cube-scale theorem at c = 1/4", [&] { return c9_cube_scale_theorem(corpus); }},
      {10, "section ratio sweeps with matched constants",
       [&] { return c10_section_ratio_sweeps(corpus); }},
      {11, "section-polar duality, exact vertex equality", c11_section_polar_duality},
      {12, "volume product bound and reverse constant", c12_volume_product},
      {13, "cube-scale law floor and the sharpness body", c13_cube_scale_law},
      {14, "section duality experiments", c14_duality_experiments},
  };

  int failed = 0;
  for (auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    bool ok = false;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.label
              << note << " [" << secs << " s]" << std::endl;
    if (!ok) ++failed;
  }

  if (g_write_goldens) {
    std::ofstream f(golden_path);
    f << g_new_goldens.dump(2) << "\n";
    std::cout << "wrote goldens to " << golden_path << "\n";
  }

  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failed))
            << "\n";
  return failed == 0 ? 0 : 1;
}

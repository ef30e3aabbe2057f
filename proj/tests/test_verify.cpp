#include <doctest.h>

#include <random>

#include "latcell/generators.hpp"
#include "latcell/verify.hpp"

using namespace latcell;

namespace {

RatVec rv(std::vector<long long> v) { return RatVec(v.begin(), v.end()); }

IntegerPointSet grid(int n, long long m) {
  GenSpec spec;
  spec.family = "full_grid";
  spec.n = n;
  spec.grid_max = m;
  return gen_discrete(spec);
}

RationalPolytope sym_hull(std::uint64_t seed, int n, int m, long long scale) {
  GenSpec spec;
  spec.family = "random_hull";
  spec.seed = seed;
  spec.n = n;
  spec.m = m;
  spec.scale = Rat(scale);
  spec.symmetric = true;
  return gen_polytope(spec);
}

}  // namespace

TEST_CASE("claim routing") {
  CHECK(is_discrete_claim("THM_2_4"));
  CHECK_FALSE(is_discrete_claim("THM_3_4"));
  CHECK(is_convex_claim("SECTION_POLAR"));
  CHECK_THROWS_AS(verify_discrete("NOPE", grid(2, 1), {}), input_error);
  CHECK_THROWS_AS(verify_convex("NOPE", RationalPolytope::empty(2), {}, {}), input_error);
}

TEST_CASE("discrete content claims on the Boolean square") {
  auto a = grid(2, 1);
  auto r24 = verify_discrete("THM_2_4", a, {});
  CHECK(r24.pass);
  CHECK(*r24.lhs_exact == 4);
  CHECK(*r24.rhs_exact == 4);  // tight on the Boolean square

  auto r22 = verify_discrete("THM_2_2", a, {});
  CHECK(r22.pass);
  CHECK(*r22.rhs_exact == 4);  // 1 + three boxes
}

TEST_CASE("slicing superadditivity claim") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    GenSpec spec;
    spec.family = "box_random";
    spec.seed = rng();
    spec.n = 3;
    spec.box_bounds = {3, 3, 3};
    spec.density = 0.4;
    auto a = gen_discrete(spec);
    if (a.empty()) continue;
    auto r = verify_discrete("LEM_2_7", a, {});
    CHECK(r.pass);
    VerifyParams params;
    params.slice_coord = 2;
    CHECK(verify_discrete("LEM_2_7", a, params).pass);
  }
}

TEST_CASE("sauer-shelah and the boolean projection estimate") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    GenSpec spec;
    spec.family = "boolean_random";
    spec.seed = rng();
    spec.n = 6;
    spec.density = 0.4;
    auto a = gen_discrete(spec);
    if (a.empty()) continue;
    CHECK(verify_discrete("SAUER_SHELAH", a, {}).pass);
    CHECK(verify_discrete("PAJOR_1", a, {}).pass);
  }
  CHECK_THROWS_AS(verify_discrete("PAJOR_1", grid(2, 3), {}), input_error);
}

TEST_CASE("haussler-long bounds with the full-grid equality case") {
  auto a = grid(3, 2);  // {0,1,2}^3, 27 points
  auto r = verify_discrete("HL_II", a, {});
  CHECK(r.pass);
  CHECK(*r.lhs_exact == 27);
  CHECK(*r.rhs_exact == 27);  // equality: sum C(3,i) 2^i = 27

  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 8; ++trial) {
    GenSpec spec;
    spec.family = "box_random";
    spec.seed = rng();
    spec.n = 3;
    spec.box_bounds = {2, 3, 4};
    spec.density = 0.5;
    auto b = gen_discrete(spec);
    if (b.empty()) continue;
    CHECK(verify_discrete("HL_I", b, {}).pass);
    CHECK(verify_discrete("HL_II", b, {}).pass);
    CHECK(verify_discrete("HL_III", b, {}).pass);
  }

  VerifyParams bad;
  bad.box_bounds = {0, 0, 0};
  CHECK_THROWS_AS(verify_discrete("HL_I", a, bad), input_error);
}

TEST_CASE("cell-count theorems on the pancake") {
  GenSpec spec;
  spec.family = "pancake";
  spec.n = 2;
  spec.lengths = {Rat(72), Rat(9) / 10};
  auto body = gen_polytope(spec);
  auto r = verify_convex("THM_1_1", body, {}, {});
  CHECK(r.pass);
  CHECK(*r.lhs_exact == Rat(9) / 5);
  CHECK(*r.rhs_exact == 72);
  CHECK(r.witness == "{1}");
  CHECK(verify_convex("THM_2_10", body, {}, {}).pass);
}

TEST_CASE("translate bound claim") {
  GenSpec spec;
  spec.family = "cube";
  spec.n = 2;
  spec.scale = Rat(3) / 2;
  auto body = gen_polytope(spec);
  VerifyParams params;
  params.trials = 40;
  auto r = verify_convex("LEM_2_9", body, params, {});
  CHECK(r.pass);
  CHECK(r.provenance == "exact");
}

TEST_CASE("coordinate volume ratio theorems on exact bodies") {
  ConstantsConfig cfg;
  auto cube3 = gen_polytope([] {
    GenSpec s;
    s.family = "cube";
    s.n = 3;
    s.scale = Rat(2);
    return s;
  }());

  VerifyParams k1;
  k1.k = 1;
  auto r34 = verify_convex("THM_3_4", cube3, k1, cfg);
  CHECK(r34.pass);
  CHECK(*r34.rhs_exact == 4);  // cube side at rank 2 is the full width

  auto r31 = verify_convex("THM_3_1", cube3, k1, cfg);
  CHECK(r31.pass);

  auto r35 = verify_convex("LEM_3_5", cube3, k1, cfg);
  CHECK(r35.pass);
  CHECK(r35.rhs >= 1.0);

  // All-k aggregation on a random symmetric body.
  auto body = sym_hull(101, 4, 12, 12);
  REQUIRE(body.full_dimensional());
  CHECK(verify_convex("THM_3_4", body, {}, cfg).pass);
  CHECK(verify_convex("LEM_3_5", body, {}, cfg).pass);
}

TEST_CASE("cube-scale law with the conservative floor") {
  ConstantsConfig cfg;
  cfg.mc_samples = 30000;
  auto body = sym_hull(103, 3, 10, 8);
  REQUIRE(body.full_dimensional());
  for (double p : {1.0, 2.0, kInfinity}) {
    VerifyParams params;
    params.p = p;
    auto r = verify_convex("THM_4_1", body, params, cfg);
    CHECK(r.pass);
    if (p == 2.0) CHECK(r.provenance == "mixed");
  }
}

TEST_CASE("ball volume monotonicity claim") {
  auto r = verify_convex("LEM_4_2", RationalPolytope::empty(1), {}, {});
  CHECK(r.pass);
  CHECK(r.lhs <= 10.0);
  CHECK(r.lhs >= 1.0);  // k = n gives ratio 1
  CHECK(r.measured_constant.has_value());
}

TEST_CASE("section-polar identity and the volume product") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    auto body = sym_hull(rng(), 3, 10, 8);
    if (!body.full_dimensional() || !body.origin_interior()) continue;
    CHECK(verify_convex("SECTION_POLAR", body, {}, {}).pass);
    auto rs = verify_convex("SANTALO", body, {}, {});
    CHECK(rs.pass);
    CHECK(rs.measured_constant.value() <= 1.0 + 1e-9);  // tight form also holds
  }
}

TEST_CASE("duality claim on the cube") {
  GenSpec spec;
  spec.family = "lp_ball";
  spec.p = kInfinity;
  spec.n = 6;
  auto body = gen_polytope(spec);
  VerifyParams params;
  params.k = 2;
  params.m = 2;
  params.eps = 1.0 / 3;
  params.c_try = 2.0;
  auto r = verify_convex("THM_5_1", body, params, {});
  CHECK(r.pass);
  CHECK(*r.lhs_exact == Rat(4) / 3);
}

TEST_CASE("sweeps measure constants over a corpus") {
  std::vector<RationalPolytope> corpus;
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) corpus.push_back(sym_hull(seed, 3, 10, 8));
  GenSpec spec;
  spec.family = "cube";
  spec.n = 3;
  spec.scale = Rat(1);
  corpus.push_back(gen_polytope(spec));

  ConstantsConfig cfg;
  cfg.mc_samples = 20000;

  auto s31 = sweep_claim("THM_3_1", corpus, {}, cfg);
  CHECK(s31.measured > 0);
  for (const auto& r : s31.reports) CHECK(r.pass);

  auto s35 = sweep_claim("LEM_3_5", corpus, {}, cfg);
  CHECK(s35.measured > 0);
  for (const auto& r : s35.reports) CHECK(r.pass);

  VerifyParams p41;
  p41.p = kInfinity;
  auto s41 = sweep_claim("THM_4_1", corpus, p41, cfg);
  CHECK(s41.measured >= 0.01);  // the conservative floor must be corpus-safe

  auto s42 = sweep_claim("LEM_4_2", {}, {}, cfg);
  CHECK(s42.measured <= 10.0);

  auto ssan = sweep_claim("SANTALO", corpus, {}, cfg);
  CHECK(ssan.measured > 0);
  CHECK(ssan.measured <= 1.0 + 1e-9);

  CHECK_THROWS_AS(sweep_claim("THM_2_4", corpus, {}, cfg), input_error);
  CHECK_THROWS_AS(sweep_claim("THM_3_1", {}, {}, cfg), input_error);
}

TEST_CASE("duality sweep returns the product-derived constant") {
  std::vector<RationalPolytope> corpus;
  GenSpec spec;
  spec.family = "lp_ball";
  spec.p = kInfinity;
  spec.n = 6;
  corpus.push_back(gen_polytope(spec));
  spec.p = 1.0;
  corpus.push_back(gen_polytope(spec));
  VerifyParams params;
  params.k = 2;
  params.m = 2;
  params.eps = 1.0 / 3;
  params.c_try = 2.0;
  auto s = sweep_claim("THM_5_1", corpus, params, {});
  CHECK(s.measured > 0);
  CHECK(s.reports.size() == 2);
}

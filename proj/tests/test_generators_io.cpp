#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "latcell/generators.hpp"
#include "latcell/io.hpp"

using namespace latcell;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/latcell_test_") + name;
}

}  // namespace

TEST_CASE("deterministic generator digests (golden)") {
  GenSpec b;
  b.family = "boolean_random";
  b.n = 8;
  b.density = 0.5;
  b.seed = 1;
  auto a1 = gen_discrete(b);
  auto a2 = gen_discrete(b);
  CHECK(point_set_to_json(a1) == point_set_to_json(a2));
  CHECK(digest_point_set(a1) == "8da510f641c197d4");
  CHECK(a1.size() == 135);

  GenSpec h;
  h.family = "random_hull";
  h.n = 3;
  h.m = 20;
  h.scale = Rat(5);
  h.seed = 7;
  CHECK(digest_polytope(gen_polytope(h)) == "4ae12cd2727d61b5");
}

TEST_CASE("structured families") {
  GenSpec g;
  g.family = "full_grid";
  g.n = 2;
  g.grid_max = 3;
  CHECK(gen_discrete(g).size() == 16);

  GenSpec d;
  d.family = "diagonal";
  d.n = 3;
  d.grid_max = 4;
  CHECK(gen_discrete(d).size() == 5);

  GenSpec p;
  p.family = "parallelepiped";
  p.n = 2;
  p.lengths = {Rat(2), Rat(1)};
  auto body = gen_polytope(p);
  CHECK(body.volume() == 8);
  CHECK(body.is_symmetric());

  GenSpec c;
  c.family = "cross";
  c.n = 3;
  c.scale = Rat(2);
  CHECK(gen_polytope(c).vertices().size() == 6);

  GenSpec bad;
  bad.family = "no_such_family";
  CHECK_THROWS_AS(gen_discrete(bad), input_error);
  CHECK_THROWS_AS(gen_polytope(bad), input_error);

  GenSpec dense;
  dense.family = "boolean_random";
  dense.n = 4;
  dense.density = 1.5;
  CHECK_THROWS_AS(gen_discrete(dense), input_error);
}

TEST_CASE("symmetric random hulls are closed under negation") {
  GenSpec s;
  s.family = "random_hull";
  s.n = 4;
  s.m = 12;
  s.scale = Rat(3);
  s.seed = 42;
  s.symmetric = true;
  auto body = gen_polytope(s);
  CHECK(body.is_symmetric());
  CHECK(digest_polytope(body) == "d1a2f871cdd30c02");
}

TEST_CASE("point set files round-trip and reject duplicates") {
  GenSpec g;
  g.family = "box_random";
  g.n = 3;
  g.box_bounds = {2, 2, 2};
  g.density = 0.6;
  g.seed = 9;
  auto a = gen_discrete(g);
  const std::string path = temp_path("points.json");
  save_point_set(a, path);
  auto back = load_point_set(path);
  CHECK(back.points() == a.points());
  CHECK(digest_point_set(back) == digest_point_set(a));
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(
      point_set_from_json(R"({"dim": 2, "points": [[0,1],[1,1],[0,1]]})"),
      "duplicate point at index 2", input_error);
  CHECK_THROWS_AS(point_set_from_json(R"({"dim": 2})"), input_error);
  CHECK_THROWS_AS(point_set_from_json("not json"), input_error);
  CHECK_THROWS_AS(load_point_set("/nonexistent/file.json"), input_error);
}

TEST_CASE("polytope files round-trip with facet audit") {
  GenSpec s;
  s.family = "random_hull";
  s.n = 3;
  s.m = 10;
  s.scale = Rat(4);
  s.seed = 3;
  s.symmetric = true;
  auto body = gen_polytope(s);
  const std::string path = temp_path("poly.json");
  save_polytope(body, path, /*with_facets=*/true);
  auto back = load_polytope(path);
  CHECK(back.vertices() == body.vertices());
  std::remove(path.c_str());

  // Vertices given as rational strings parse exactly.
  auto tri = polytope_from_json(
      R"({"dim": 2, "vertices": [["0","0"],["3/2","0"],["0","3/2"]]})");
  CHECK(tri.volume() == Rat(9) / 8);

  // A facet that cuts a vertex or floats free is rejected.
  CHECK_THROWS_AS(polytope_from_json(R"({"dim": 1, "vertices": [["0"],["2"]],
    "facets": [{"normal": ["1"], "offset": "1"}]})"),
                  input_error);
  CHECK_THROWS_AS(polytope_from_json(R"({"dim": 1, "vertices": [["0"],["2"]],
    "facets": [{"normal": ["1"], "offset": "5"}]})"),
                  input_error);
}

TEST_CASE("config loading") {
  const std::string path = temp_path("cfg.json");
  {
    std::ofstream f(path);
    f << R"({"c_projection_ratio": "1/3", "C_section_ratio": "9", "mc_samples": 5000,
             "mc_seed": 77, "c_cube_fraction": 0.02})";
  }
  auto cfg = load_config(path);
  CHECK(cfg.c_projection_ratio == Rat(1) / 3);
  CHECK(cfg.C_section_ratio == 9);
  CHECK(cfg.mc_samples == 5000);
  CHECK(cfg.mc_seed == 77);
  std::remove(path.c_str());

  {
    std::ofstream f(path);
    f << R"({"mc_samples": -3})";
  }
  CHECK_THROWS_AS(load_config(path), input_error);
  std::remove(path.c_str());
}

TEST_CASE("report serialization carries every field") {
  VerificationReport r;
  r.claim = "THM_2_4";
  r.input_digest = "cafe";
  r.lhs = 4;
  r.rhs = 4;
  r.lhs_exact = Rat(4);
  r.rhs_exact = Rat(4);
  r.pass = true;
  r.witness = "{1,2}";
  r.measured_constant = 1.5;
  r.ci_half_width = 0.01;
  r.provenance = "exact";
  RunManifest m;
  m.command_line = "latcell verify THM_2_4";
  m.tool_version = "test";
  const std::string j = report_to_json(r, m);
  CHECK(j.find("\"claim\": \"THM_2_4\"") != std::string::npos);
  CHECK(j.find("\"lhs_exact\": \"4\"") != std::string::npos);
  CHECK(j.find("\"measured_constant\"") != std::string::npos);
  CHECK(j.find("\"manifest\"") != std::string::npos);

  const std::string csv = report_to_csv_row(r);
  CHECK(csv.find("THM_2_4") == 0);
  CHECK(csv.find("\"{1,2}\"") != std::string::npos);
  // CSV mode keeps the same field count as the header.
  const auto commas = [](const std::string& s) {
    std::size_t n = 0;
    bool quoted = false;
    for (char c : s) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++n;
    }
    return n;
  };
  CHECK(commas(csv) == commas(report_csv_header()));
}

TEST_CASE("sharpness body membership") {
  auto body = gen_sharpness_body(6, 3, 2.0, Rat(1) / 10);
  CHECK(body.contains(std::vector<double>(6, 0.0)));
  CHECK(body.contains_exact(RatVec(6, Rat(0))));
  // All-coordinates-at-1 has no small coordinate.
  CHECK_FALSE(body.contains(std::vector<double>(6, 1.0)));
  CHECK_FALSE(body.contains_exact(RatVec(6, Rat(1))));
  // Outside the ball even with enough small coordinates.
  std::vector<double> far(6, 0.0);
  far[0] = 10.0;
  CHECK_FALSE(body.contains(far));
  // Exactly k small coordinates, inside the ball.
  RatVec edge(6, Rat(1));
  edge[0] = edge[1] = edge[2] = Rat(1) / 20;
  CHECK(body.contains_exact(edge));

  CHECK_THROWS_AS(gen_sharpness_body(6, 2, 2.0, Rat(1) / 10), input_error);
  CHECK_THROWS_AS(gen_sharpness_body(6, 6, 2.0, Rat(1) / 10), input_error);
  CHECK_THROWS_AS(gen_sharpness_body(6, 3, 2.0, Rat(0)), input_error);
}

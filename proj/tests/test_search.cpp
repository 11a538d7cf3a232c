#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "politrigon/config_search.hpp"
#include "politrigon/scene_io.hpp"

using namespace politrigon;

namespace {

AngleConfig equal_gaps(int n) {
  AngleConfig c;
  c.n = n;
  c.gaps.assign(3 * n, 2 * M_PI / (3 * n));
  return c;
}

// Reads just n and the gaps line from an outcome file.
AngleConfig config_from_outcome(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  AngleConfig c;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") ls >> c.n;
    if (key == "gaps") {
      double g;
      while (ls >> g) c.gaps.push_back(g);
    }
  }
  REQUIRE(static_cast<int>(c.gaps.size()) == 3 * c.n);
  return c;
}

SearchOutcome outcome_from(const AngleConfig& c) {
  SearchOutcome o;
  o.best = c;
  o.scene = angles_to_scene(c);
  UnionResult r = union_boundary(o.scene);
  REQUIRE(r.simple());
  o.best_m = r.polygon->side_count();
  o.certificate = *r.polygon;
  return o;
}

std::string data_path(const char* name) {
  return std::string(POLITRIGON_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("angle configurations rationalize onto the unit circle") {
  Scene one = angles_to_scene(equal_gaps(1));
  REQUIRE(one.size() == 1);
  UnionResult r1 = union_boundary(one);
  REQUIRE(r1.simple());
  CHECK(r1.polygon->side_count() == 3);
  for (const Triangle& t : one.triangles)
    for (const Point& p : t.v)
      CHECK(p.x * p.x + p.y * p.y == 1);  // exactly on the circle

  // Two interleaved equilateral-ish triangles: a 12-sided star.
  UnionResult r2 = union_boundary(angles_to_scene(equal_gaps(2)));
  REQUIRE(r2.simple());
  CHECK(r2.polygon->side_count() == 12);
}

TEST_CASE("score is -1 when a configuration cannot be realized") {
  AngleConfig c = equal_gaps(2);
  // Coincident points cannot be separated at any rationalization precision.
  c.gaps[1] = 0.0;
  CHECK(score(c) == -1);
  CHECK_THROWS_AS(angles_to_scene(c), PrecisionLoss);
  AngleConfig bad;
  bad.n = 2;
  bad.gaps = {1.0, 1.0, 1.0};  // wrong arity
  CHECK_THROWS_AS(angles_to_scene(bad), std::invalid_argument);
}

TEST_CASE("search finds the known optima for small n") {
  SearchOptions opt;
  opt.budget = 400;
  opt.restarts = 2;
  SearchOutcome two = search_max_sides(2, opt);
  CHECK(two.best_m == 12);
  CHECK(two.certificate.side_count() == 12);
  CHECK(two.trace.evaluations >= 2);

  opt.budget = 6000;
  opt.restarts = 4;
  SearchOutcome three = search_max_sides(3, opt);
  CHECK(three.best_m == 22);
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchOptions opt;
  opt.budget = 300;
  opt.restarts = 3;
  opt.seed = 7;
  SearchOutcome a = search_max_sides(2, opt);
  SearchOutcome b = search_max_sides(2, opt);
  CHECK(a.best_m == b.best_m);
  CHECK(a.best.gaps == b.best.gaps);
  CHECK(write_scene(a.scene) == write_scene(b.scene));
}

TEST_CASE("a stored template lets a tiny budget reach its score") {
  SearchOptions opt;
  opt.budget = 40;
  opt.restarts = 2;
  opt.seed = 3;
  opt.seed_template = config_from_outcome(data_path("seed79.outcome"));
  SearchOutcome out = search_max_sides(8, opt);
  CHECK(out.best_m >= 79);
  // Without the template the same budget falls far short.
  opt.seed_template.reset();
  CHECK(search_max_sides(8, opt).best_m < 79);
}

TEST_CASE("canonical score is exact area over summed squared sides") {
  Scene tri = parse_scene("politrigon-scene 1\n1\n0 0 1 0 0 1\n");
  UnionResult rt = union_boundary(tri);
  REQUIRE(rt.simple());
  CHECK(canonical_score(*rt.polygon) == Rat(1, 8));

  // Unit square assembled from two triangles: area 1, sides 1+1+1+1.
  Scene sq = parse_scene(
      "politrigon-scene 1\n2\n0 0 1 0 1 1\n0 0 1 1 0 1\n");
  UnionResult rs = union_boundary(sq);
  REQUIRE(rs.simple());
  CHECK(rs.polygon->side_count() == 4);
  CHECK(canonical_score(*rs.polygon) == Rat(1, 4));
}

TEST_CASE("canonical optimization preserves the side count") {
  SearchOutcome start = outcome_from(config_from_outcome(
      data_path("config33.outcome")));
  REQUIRE(start.best_m == 33);
  Rat before = canonical_score(start.certificate);
  SearchOutcome out = optimize_canonical(start, 300);
  CHECK(out.best_m == 33);
  CHECK(out.certificate.side_count() == 33);
  CHECK(canonical_score(out.certificate) >= before);

  SearchOutcome star = outcome_from(equal_gaps(2));
  REQUIRE(star.best_m == 12);
  Rat star_before = canonical_score(star.certificate);
  SearchOutcome star_out = optimize_canonical(star, 200);
  CHECK(star_out.best_m == 12);
  CHECK(canonical_score(star_out.certificate) >= star_before);
}

TEST_CASE("stored outcome assets replay to their recorded side counts") {
  struct { const char* file; int m; } cases[] = {
      {"seed79.outcome", 79}, {"config33.outcome", 33},
      {"config22.outcome", 22}};
  for (auto [file, m] : cases) {
    AngleConfig c = config_from_outcome(data_path(file));
    UnionResult r = union_boundary(angles_to_scene(c));
    REQUIRE(r.simple());
    CHECK(r.polygon->side_count() == m);
  }
}

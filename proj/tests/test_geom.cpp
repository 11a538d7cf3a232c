#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "politrigon/geom.hpp"
#include "test_util.hpp"

using namespace politrigon;
using testutil::pt;

namespace {

// Independent classification through the parametric 2x2 system
// s.a + u (s.b - s.a) = t.a + v (t.b - t.a), solved in rationals.
IntersectionKind slow_intersect(const Segment& s, const Segment& t) {
  Rat dx1 = s.b.x - s.a.x, dy1 = s.b.y - s.a.y;
  Rat dx2 = t.b.x - t.a.x, dy2 = t.b.y - t.a.y;
  Rat det = dx1 * dy2 - dy1 * dx2;
  Rat rx = t.a.x - s.a.x, ry = t.a.y - s.a.y;
  if (det != 0) {
    Rat u = (rx * dy2 - ry * dx2) / det;
    Rat v = (rx * dy1 - ry * dx1) / det;
    if (u < 0 || u > 1 || v < 0 || v > 1) return IntersectNone{};
    Point p{s.a.x + u * dx1, s.a.y + u * dy1};
    bool interior_u = u > 0 && u < 1;
    bool interior_v = v > 0 && v < 1;
    if (interior_u && interior_v) return IntersectProper{p};
    return IntersectTouch{p};
  }
  // Parallel; collinear iff t.a solves the line equation of s.
  if (rx * dy1 - ry * dx1 != 0) return IntersectNone{};
  // Project both segments on the parameter of s.
  Rat len2 = dx1 * dx1 + dy1 * dy1;
  auto param = [&](const Point& p) -> Rat {
    return ((p.x - s.a.x) * dx1 + (p.y - s.a.y) * dy1) / len2;
  };
  Rat ta = param(t.a), tb = param(t.b);
  if (tb < ta) std::swap(ta, tb);
  Rat lo = ta > 0 ? ta : Rat(0);
  Rat hi = tb < 1 ? tb : Rat(1);
  if (lo > hi) return IntersectNone{};
  Point plo{s.a.x + lo * dx1, s.a.y + lo * dy1};
  Point phi{s.a.x + hi * dx1, s.a.y + hi * dy1};
  if (lo == hi) return IntersectTouch{plo};
  return IntersectOverlap{{plo, phi}};
}

bool same_kind(const IntersectionKind& a, const IntersectionKind& b) {
  if (a.index() != b.index()) return false;
  if (auto* pa = std::get_if<IntersectProper>(&a))
    return pa->p == std::get<IntersectProper>(b).p;
  if (auto* ta = std::get_if<IntersectTouch>(&a)) return ta->p == std::get<IntersectTouch>(b).p;
  if (auto* oa = std::get_if<IntersectOverlap>(&a)) {
    Segment x = oa->s, y = std::get<IntersectOverlap>(b).s;
    return (x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a);
  }
  return true;
}

}  // namespace

TEST_CASE("orientation basics") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orientation antisymmetry under swap") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    Point p = pt(d(rng), d(rng)), q = pt(d(rng), d(rng)), r = pt(d(rng), d(rng));
    CHECK(orientation(p, q, r) == -orientation(p, r, q));
  }
}

TEST_CASE("segment intersection examples") {
  auto k = intersect_segments({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)});
  REQUIRE(std::holds_alternative<IntersectProper>(k));
  CHECK(std::get<IntersectProper>(k).p == pt(1, 1));

  CHECK(std::holds_alternative<IntersectNone>(
      intersect_segments({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)})));

  auto ov = intersect_segments({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)});
  REQUIRE(std::holds_alternative<IntersectOverlap>(ov));
  CHECK(std::get<IntersectOverlap>(ov).s.a == pt(1, 0));
  CHECK(std::get<IntersectOverlap>(ov).s.b == pt(2, 0));
}

TEST_CASE("segment intersection agrees with the 2x2 solver and is symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  auto rp = [&]() { return Point{rat(num(rng), den(rng)), rat(num(rng), den(rng))}; };
  int done = 0;
  while (done < 100000) {
    Point a = rp(), b = rp(), c = rp(), d = rp();
    if (a == b || c == d) continue;
    ++done;
    Segment s{a, b}, t{c, d};
    IntersectionKind fast = intersect_segments(s, t);
    REQUIRE(same_kind(fast, slow_intersect(s, t)));
    REQUIRE(same_kind(fast, intersect_segments(t, s)));
  }
}

TEST_CASE("point vs triangle") {
  Triangle t = testutil::tri(pt(0, 0), pt(6, 0), pt(0, 6));
  Point centroid{rat(2), rat(2)};
  CHECK(point_vs_triangle(centroid, t) == PointSide::Inside);
  CHECK(point_vs_triangle(pt(0, 0), t) == PointSide::OnBoundary);
  CHECK(point_vs_triangle(pt(3, 0), t) == PointSide::OnBoundary);
  CHECK(point_vs_triangle(pt(-1, 2), t) == PointSide::Outside);
}

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rat("3/4") == rat(3, 4));
  CHECK(*parse_rat("-6/8") == rat(-3, 4));
  CHECK(*parse_rat("0.25") == rat(1, 4));
  CHECK(*parse_rat("-1.5") == rat(-3, 2));
  CHECK(*parse_rat("7") == rat(7));
  CHECK(!parse_rat("1/0").has_value());
  CHECK(!parse_rat("x").has_value());
  CHECK(rat_to_string(rat(-3, 4)) == "-3/4");
  CHECK(rat_to_string(rat(5)) == "5");
  CHECK(*parse_rat(rat_to_string(rat(-22, 7))) == rat(-22, 7));
}

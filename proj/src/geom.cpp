#include "politrigon/geom.hpp"

#include <algorithm>
#include <utility>

namespace politrigon {

bool lex_less(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return a.y < b.y;
}

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat dot(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Rat dist_sq(const Point& a, const Point& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

int orientation(const Point& p, const Point& q, const Point& r) {
  return sign(cross(p, q, r));
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return sign(dot(p, s.a, s.b)) <= 0;
}

namespace {

// Intersection point of the supporting lines; caller guarantees the lines
// are not parallel.
Point line_intersection(const Segment& s, const Segment& t) {
  Rat denom = (s.b.x - s.a.x) * (t.b.y - t.a.y) - (s.b.y - s.a.y) * (t.b.x - t.a.x);
  Rat u = ((t.a.x - s.a.x) * (t.b.y - t.a.y) - (t.a.y - s.a.y) * (t.b.x - t.a.x)) / denom;
  return {s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y)};
}

}  // namespace

IntersectionKind intersect_segments(const Segment& s, const Segment& t) {
  int d1 = orientation(t.a, t.b, s.a);
  int d2 = orientation(t.a, t.b, s.b);
  int d3 = orientation(s.a, s.b, t.a);
  int d4 = orientation(s.a, s.b, t.b);

  if (d1 == 0 && d2 == 0) {
    // Collinear: compare 1-D intervals along the dominant axis of s.
    bool use_x = s.a.x != s.b.x;
    auto coord = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    Point slo = s.a, shi = s.b, tlo = t.a, thi = t.b;
    if (coord(shi) < coord(slo)) std::swap(slo, shi);
    if (coord(thi) < coord(tlo)) std::swap(tlo, thi);
    Point lo = coord(slo) < coord(tlo) ? tlo : slo;
    Point hi = coord(shi) < coord(thi) ? shi : thi;
    int c = cmp(coord(lo), coord(hi));
    if (c > 0) return IntersectNone{};
    if (c == 0) return IntersectTouch{lo};
    return IntersectOverlap{{lo, hi}};
  }

  if (d1 * d2 < 0 && d3 * d4 < 0) return IntersectProper{line_intersection(s, t)};

  if (d1 == 0 && on_segment(s.a, t)) return IntersectTouch{s.a};
  if (d2 == 0 && on_segment(s.b, t)) return IntersectTouch{s.b};
  if (d3 == 0 && on_segment(t.a, s)) return IntersectTouch{t.a};
  if (d4 == 0 && on_segment(t.b, s)) return IntersectTouch{t.b};
  return IntersectNone{};
}

PointSide point_vs_triangle(const Point& p, const Triangle& t) {
  int o0 = orientation(t.v[0], t.v[1], p);
  int o1 = orientation(t.v[1], t.v[2], p);
  int o2 = orientation(t.v[2], t.v[0], p);
  if (o0 < 0 || o1 < 0 || o2 < 0) return PointSide::Outside;
  if (o0 > 0 && o1 > 0 && o2 > 0) return PointSide::Inside;
  return PointSide::OnBoundary;
}

bool make_ccw(Triangle& t) {
  int o = orientation(t.v[0], t.v[1], t.v[2]);
  if (o == 0) return false;
  if (o < 0) std::swap(t.v[1], t.v[2]);
  return true;
}

}  // namespace politrigon

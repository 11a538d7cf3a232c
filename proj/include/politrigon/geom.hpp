#pragma once

#include <array>
#include <compare>
#include <variant>

#include "politrigon/rat.hpp"

namespace politrigon {

struct Point {
  Rat x;
  Rat y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic (x, then y); used wherever a deterministic choice of a
// point is needed (walk starts, rejection witnesses).
bool lex_less(const Point& a, const Point& b);

struct Segment {
  Point a;
  Point b;
};

// Counterclockwise triangle; edge k runs from vertex k to vertex (k+1)%3.
struct Triangle {
  std::array<Point, 3> v;

  const Point& vertex(int k) const { return v[k % 3]; }
  Segment edge(int k) const { return {v[k % 3], v[(k + 1) % 3]}; }
};

// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

Rat cross(const Point& o, const Point& a, const Point& b);
Rat dot(const Point& o, const Point& a, const Point& b);
Rat dist_sq(const Point& a, const Point& b);

// p lies on the closed segment s (collinearity included in the check).
bool on_segment(const Point& p, const Segment& s);

struct IntersectNone {};
struct IntersectProper {
  Point p;
};
struct IntersectTouch {
  Point p;
};
struct IntersectOverlap {
  Segment s;
};
using IntersectionKind =
    std::variant<IntersectNone, IntersectProper, IntersectTouch, IntersectOverlap>;

// Exact classification of how two segments meet. Proper means the interiors
// cross; Touch means an endpoint lies on the other segment (shared endpoints
// included); Overlap means collinear with a common sub-segment of positive
// length.
IntersectionKind intersect_segments(const Segment& s, const Segment& t);

enum class PointSide { Inside, OnBoundary, Outside };

PointSide point_vs_triangle(const Point& p, const Triangle& t);

// Orients a vertex triple counterclockwise; returns false if collinear.
bool make_ccw(Triangle& t);

}  // namespace politrigon

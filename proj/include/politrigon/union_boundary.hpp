#pragma once

#include <optional>
#include <string>
#include <vector>

#include "politrigon/scene.hpp"

namespace politrigon {

// One maximal non-collinear side of the union polygon. owner/edge_index name
// the input edge the side is a sub-segment of; where collinear edges of
// several triangles overlap on the boundary, owner is the lowest index among
// the contributors.
struct Side {
  int owner = 0;       // 0-based triangle index
  int edge_index = 0;  // 0..2
  Rat length_sq;
};

// Simple polygon traversed counterclockwise. sides[k] runs from vertices[k]
// to vertices[(k+1) % M]; side count equals vertex count by the collinear
// merge invariant.
struct AnnotatedPolygon {
  std::vector<Point> vertices;
  std::vector<Side> sides;
  int n = 0;  // triangles in the scene

  int side_count() const { return static_cast<int>(sides.size()); }
};

enum class RejectReason { Hole, DisconnectedInterior, PinchPoint, DegenerateContact };

struct Rejection {
  RejectReason reason;
  Point witness;
};

struct UnionResult {
  std::optional<AnnotatedPolygon> polygon;  // set iff the union is simple
  std::optional<Rejection> rejection;

  bool simple() const { return polygon.has_value(); }
};

// Boundary of the union of the closed triangles, certified simple (single
// Jordan curve, connected interior, connected complement), or a structured
// rejection with a witness point. Collinear touches that keep the union
// simple are permitted and merged; boundary pinches are rejected.
UnionResult union_boundary(const Scene& s);

int side_count(const AnnotatedPolygon& p);

// l_i = number of sides owned by triangle i; sums to the side count.
std::vector<int> contributions(const AnnotatedPolygon& p);

// Shoelace area; positive for the counterclockwise boundary.
Rat area(const AnnotatedPolygon& p);

Rat sum_length_sq(const AnnotatedPolygon& p);

const char* reject_reason_name(RejectReason r);

// Side counts for many scenes at once, -1 for a rejected scene. The batch
// kernel certifies scenes in parallel with OpenMP (threads = 0 keeps the
// runtime default); the serial variant is the reference implementation the
// parallel one is tested and benchmarked against.
std::vector<int> certify_batch(const std::vector<Scene>& scenes,
                               int threads = 0);
std::vector<int> certify_batch_serial(const std::vector<Scene>& scenes);

}  // namespace politrigon

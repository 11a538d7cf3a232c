#pragma once

// Assembly of a union boundary from an unordered bag of boundary
// sub-segments. Both union algorithms reduce their output to this form;
// the geometric classification that decides *which* sub-segments lie on
// the boundary is what differs between them.

#include <map>
#include <utility>
#include <vector>

#include "politrigon/union_boundary.hpp"

namespace politrigon::detail {

struct BoundaryPiece {
  Point a;
  Point b;
  // Input edges whose triangle interior borders this piece, i.e. the
  // candidates for side ownership. (triangle, edge) pairs.
  std::vector<std::pair<int, int>> contributors;
};

// Builds the polygon (or rejection) from boundary pieces:
//   - any vertex of degree >= 4 -> PinchPoint
//   - several boundary cycles: >= 2 outermost -> DisconnectedInterior,
//     otherwise -> Hole
//   - single cycle -> CCW walk from the lexicographically smallest vertex,
//     maximal collinear runs merged into sides.
// Witness points are the lexicographically smallest candidates, so the two
// union implementations agree verbatim.
UnionResult assemble_boundary(std::vector<BoundaryPiece> pieces, int n_triangles);

// Exact even-odd test; p must not lie on the cycle.
bool point_in_cycle(const Point& p, const std::vector<Point>& cycle);

}  // namespace politrigon::detail

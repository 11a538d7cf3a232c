#pragma once

#include <vector>

#include "politrigon/geom.hpp"

namespace politrigon {

// Ordered list of counterclockwise triangles; the unit of input/output for
// the whole artifact. Triangle indices are 0-based internally and 1-based
// in every report.
struct Scene {
  std::vector<Triangle> triangles;

  int size() const { return static_cast<int>(triangles.size()); }
};

// Rational affine map p -> A p + b, used by the invariance tests and by
// scene normalization.
struct AffineMap {
  Rat a00, a01, a10, a11;
  Rat bx, by;

  Point apply(const Point& p) const {
    return {a00 * p.x + a01 * p.y + bx, a10 * p.x + a11 * p.y + by};
  }
};

Scene transform(const Scene& s, const AffineMap& m);

}  // namespace politrigon

#include "politrigon/scene.hpp"

#include <stdexcept>

namespace politrigon {

Scene transform(const Scene& s, const AffineMap& m) {
  Scene out;
  out.triangles.reserve(s.triangles.size());
  for (const Triangle& t : s.triangles) {
    Triangle tt{{m.apply(t.v[0]), m.apply(t.v[1]), m.apply(t.v[2])}};
    if (!make_ccw(tt)) throw std::invalid_argument("degenerate affine map");
    out.triangles.push_back(tt);
  }
  return out;
}

}  // namespace politrigon

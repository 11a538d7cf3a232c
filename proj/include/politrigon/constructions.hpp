#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "politrigon/scene_io.hpp"
#include "politrigon/union_boundary.hpp"

namespace politrigon {

// Deterministic generators for the lower-bound families. Every generator
// certifies its own output with union_boundary and throws instead of
// returning an uncertified scene.

struct CertificationFailed : std::runtime_error {
  explicit CertificationFailed(const std::string& what)
      : std::runtime_error(what) {}
};

struct NoEligibleEdge : std::runtime_error {
  explicit NoEligibleEdge(const std::string& what)
      : std::runtime_error(what) {}
};

// One protrusion step: pick a point on each of three sides of the current
// union polygon, shift the points slightly outward, and add the triangle
// through the shifted points. The side count grows by 9 plus the number of
// engulfed reflex vertices (0, 1, or 2).
struct ProtrusionSpec {
  std::array<int, 3> sides;    // side indices of the current union polygon
  std::array<Rat, 3> params;   // position along each side, in (0, 1)
  std::array<Rat, 3> offsets;  // initial outward offsets, shrunk adaptively
  std::vector<int> engulfed;   // reflex vertex indices that must disappear

  ProtrusionSpec()
      : sides{0, 1, 2},
        params{Rat(1, 2), Rat(1, 2), Rat(1, 2)},
        offsets{Rat(1, 1024), Rat(1, 1024), Rat(1, 1024)} {}
};

// Two centrally symmetric triangles whose union is a 12-gon star. An affine
// image with rational vertices is used; side count and boundary structure
// are affine invariants.
Scene hexagram();

// Appends the protruded triangle and certifies the result. Offsets are
// halved together (down to 2^-60 of the originals) until certification
// passes with the advertised side-count increase and every listed engulfed
// vertex gone from the boundary; otherwise CertificationFailed.
Scene add_protruded(const Scene& s, const ProtrusionSpec& spec);

// n triangles whose union is a certified simple polygon with 9n - 6 sides:
// one base triangle plus n - 1 plain protrusions (+9 each).
Scene family_9n6(int n);

// Three base triangles forming a 22-gon, plus n - 3 triangles added by the
// +11 inflation step; certified 11n - 11 sides. Valid for n >= 4.
Scene family_11n11(int n);

// All intermediate stages of the 11n-11 ladder: element k holds the scene
// with k + 3 triangles (element 0 is the 22-gon base), up to n_max
// triangles. Building the ladder once is much cheaper than calling
// family_11n11 per stage.
std::vector<Scene> family_11n11_ladder(int n_max);

// The +11 inductive step: `edge` indexes a side of the current union
// polygon both of whose endpoints are crossing vertices (not vertices of an
// input triangle). Adds m triangles anchored at interior points of that
// side, each certified to raise the side count by exactly 11.
Scene inflate_induction(const Scene& s, int edge, int m);

// The stored 8-triangle seed with a certified 79-gon union. Loaded from the
// checked-in data asset and re-certified; never regenerated silently.
Scene seed79();
std::string seed79_path();

// Seed79 plus inflate_induction with m = n - 8; certified 11n - 9 sides.
// Valid for n >= 9.
Scene family_11n9(int n);

// All stages of the 11n-9 ladder: element k holds the scene with k + 8
// triangles (element 0 is the seed), up to n_max triangles.
std::vector<Scene> family_11n9_ladder(int n_max);

// n congruent triangles inscribed in the unit circle with the cyclic vertex
// order i, n+i, 2n+i, arranged with an n-fold rotational layout. For
// n = 5 and n = 8 the union is a certified simple polygon meeting the
// side-count upper bound exactly: 45 and 80 sides.
Scene pinwheel(int n);

namespace detail {
// First boundary intersection of the ray a + t (b - a) with t > t_min.
// Returns the parameter and the point.
struct RayHit {
  Rat t;
  Point at;
};
std::optional<RayHit> first_boundary_hit(const AnnotatedPolygon& p,
                                         const Point& a, const Point& b,
                                         const Rat& t_min);
// True when q coincides with a vertex of an input triangle.
bool is_input_vertex(const Scene& s, const Point& q);
}  // namespace detail

}  // namespace politrigon

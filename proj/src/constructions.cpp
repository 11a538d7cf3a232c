#include "politrigon/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace politrigon {

namespace {

Point lerp(const Point& a, const Point& b, const Rat& t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

// Outward normal of side k of a counterclockwise polygon (not normalized;
// its length equals the side length).
Point outward_normal(const Point& a, const Point& b) {
  return {b.y - a.y, a.x - b.x};
}

Rat inv_pow2(int e) {
  mpz_class d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), e);
  return rat(mpz_class(1), d);
}

Triangle ccw(Point a, Point b, Point c) {
  if (orientation(a, b, c) < 0) std::swap(b, c);
  return Triangle{{a, b, c}};
}

// Rounds a coordinate to a dyadic rational. Constructed points are
// intersections of intersections; without rounding their representations
// grow multiplicatively along a ladder and unions slow to a crawl. The
// rounded triangle is only accepted after full certification, so rounding
// never costs correctness.
Point round_point(const Point& p, int bits) {
  return {dyadic_round(to_double(p.x), bits), dyadic_round(to_double(p.y), bits)};
}

const AnnotatedPolygon& require_simple(const UnionResult& r,
                                       const std::string& who) {
  if (!r.simple())
    throw CertificationFailed(who + ": base scene union is not simple");
  return *r.polygon;
}

bool vertex_on_boundary(const AnnotatedPolygon& p, const Point& q) {
  for (const Point& v : p.vertices)
    if (v.x == q.x && v.y == q.y) return true;
  return false;
}

bool reflex_at(const AnnotatedPolygon& p, int k) {
  int m = p.side_count();
  const Point& a = p.vertices[(k + m - 1) % m];
  const Point& b = p.vertices[k];
  const Point& c = p.vertices[(k + 1) % m];
  return orientation(a, b, c) < 0;
}

// The adaptive offset protocol: scale factors 1, 1/2, 1/4, ... applied to
// the initial offsets until certification passes or the offsets drop below
// 2^-60 of their original size.
constexpr int kMaxHalvings = 60;

struct InflationStep {
  Triangle added;
  int eps_exponent = 0;
};

// One +11 inflation anchored at the midpoint of side `piece` of the current
// polygon. Returns the certified scene extension or nothing.
std::optional<Scene> try_inflation(const Scene& s, const AnnotatedPolygon& p,
                                   int piece) {
  int m = p.side_count();
  const Point& e1 = p.vertices[piece];
  const Point& e2 = p.vertices[(piece + 1) % m];
  // Sunlight points: continue the neighbouring sides' supporting lines past
  // the shared endpoint (under the union) to the first point where they
  // meet the boundary again.
  const Rat just = Rat(1) + Rat(1, 1000000);
  int before = (piece + m - 1) % m;
  int after = (piece + 1) % m;
  auto hit_p = detail::first_boundary_hit(p, p.vertices[before], e1, just);
  auto hit_q =
      detail::first_boundary_hit(p, p.vertices[(after + 1) % m], e2, just);
  if (!hit_p || !hit_q) return std::nullopt;
  Point x = lerp(e1, e2, Rat(1, 2));
  // Rays from x through each sunlight point, extended to the boundary.
  auto hit_y = detail::first_boundary_hit(p, x, hit_q->at, just);
  auto hit_z = detail::first_boundary_hit(p, x, hit_p->at, just);
  if (!hit_y || !hit_z) return std::nullopt;
  Point y = hit_y->at, z = hit_z->at;
  Point c{(x.x + y.x + z.x) / 3, (x.y + y.y + z.y) / 3};
  for (int e = 10; e <= kMaxHalvings; ++e) {
    Rat lambda = Rat(1) + inv_pow2(e);
    auto blow = [&](const Point& v) -> Point {
      return {c.x + lambda * (v.x - c.x), c.y + lambda * (v.y - c.y)};
    };
    Point bx = round_point(blow(x), e + 20);
    Point by = round_point(blow(y), e + 20);
    Point bz = round_point(blow(z), e + 20);
    if (orientation(bx, by, bz) == 0) continue;
    Scene s2 = s;
    s2.triangles.push_back(ccw(bx, by, bz));
    UnionResult r = union_boundary(s2);
    if (r.simple() && r.polygon->side_count() == m + 11) return s2;
  }
  return std::nullopt;
}

// Eligible sides of the polygon (both endpoints are crossing vertices),
// longest first; ties keep boundary order.
std::vector<int> eligible_sides(const Scene& s, const AnnotatedPolygon& p) {
  int m = p.side_count();
  std::vector<int> order;
  for (int e = 0; e < m; ++e) {
    if (detail::is_input_vertex(s, p.vertices[e])) continue;
    if (detail::is_input_vertex(s, p.vertices[(e + 1) % m])) continue;
    order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.sides[a].length_sq > p.sides[b].length_sq;
  });
  return order;
}

// One ladder step: first eligible side (longest first) that admits a
// certified +11 inflation.
Scene inflate_any(const Scene& s) {
  UnionResult r = union_boundary(s);
  const AnnotatedPolygon& p = require_simple(r, "inflate");
  for (int e : eligible_sides(s, p))
    if (auto next = try_inflation(s, p, e)) return *next;
  throw CertificationFailed("inflate: no eligible side admits a +11 step");
}

// True when q lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& q) {
  if (orientation(a, b, q) != 0) return false;
  Rat dot = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
  Rat len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot >= 0 && dot <= len;
}

}  // namespace

namespace detail {

std::optional<RayHit> first_boundary_hit(const AnnotatedPolygon& p,
                                         const Point& a, const Point& b,
                                         const Rat& t_min) {
  std::optional<RayHit> best;
  int m = p.side_count();
  Rat dx = b.x - a.x, dy = b.y - a.y;
  for (int k = 0; k < m; ++k) {
    const Point& c = p.vertices[k];
    const Point& d = p.vertices[(k + 1) % m];
    Rat ex = d.x - c.x, ey = d.y - c.y;
    Rat den = dx * ey - dy * ex;
    if (den == 0) continue;  // parallel or collinear: no proper crossing
    Rat t = ((c.x - a.x) * ey - (c.y - a.y) * ex) / den;
    Rat u = ((c.x - a.x) * dy - (c.y - a.y) * dx) / den;
    if (t > t_min && u >= 0 && u <= 1)
      if (!best || t < best->t) best = RayHit{t, {a.x + t * dx, a.y + t * dy}};
  }
  return best;
}

bool is_input_vertex(const Scene& s, const Point& q) {
  for (const Triangle& t : s.triangles)
    for (int j = 0; j < 3; ++j)
      if (t.v[j].x == q.x && t.v[j].y == q.y) return true;
  return false;
}

}  // namespace detail

Scene hexagram() {
  Scene s;
  s.triangles.push_back(ccw({rat(2), rat(0)}, {rat(-1), rat(2)}, {rat(-1), rat(-2)}));
  s.triangles.push_back(ccw({rat(-2), rat(0)}, {rat(1), rat(-2)}, {rat(1), rat(2)}));
  return s;
}

Scene add_protruded(const Scene& s, const ProtrusionSpec& spec) {
  UnionResult base = union_boundary(s);
  const AnnotatedPolygon& p = require_simple(base, "add_protruded");
  int m = p.side_count();
  for (int k = 0; k < 3; ++k) {
    if (spec.sides[k] < 0 || spec.sides[k] >= m)
      throw CertificationFailed("add_protruded: side index out of range");
    if (spec.params[k] <= 0 || spec.params[k] >= 1)
      throw CertificationFailed("add_protruded: param outside (0, 1)");
    if (spec.offsets[k] <= 0)
      throw CertificationFailed("add_protruded: offsets must be positive");
  }
  if (spec.engulfed.size() > 2)
    throw CertificationFailed("add_protruded: at most 2 engulfed vertices");
  for (int v : spec.engulfed) {
    if (v < 0 || v >= m)
      throw CertificationFailed("add_protruded: engulfed vertex out of range");
    if (!reflex_at(p, v))
      throw CertificationFailed("add_protruded: engulfed vertex not reflex");
  }
  if (spec.engulfed.size() == 2) {
    int d = std::abs(spec.engulfed[0] - spec.engulfed[1]);
    if (d == 1 || d == m - 1)
      throw CertificationFailed("add_protruded: engulfed vertices adjacent");
  }

  int expected = m + 9 + static_cast<int>(spec.engulfed.size());
  for (int h = 0; h <= kMaxHalvings; ++h) {
    Rat scale = inv_pow2(h);
    Point tip[3];
    for (int k = 0; k < 3; ++k) {
      const Point& a = p.vertices[spec.sides[k]];
      const Point& b = p.vertices[(spec.sides[k] + 1) % m];
      Point q = lerp(a, b, spec.params[k]);
      Point nrm = outward_normal(a, b);
      Rat eps = spec.offsets[k] * scale;
      tip[k] = {q.x + nrm.x * eps, q.y + nrm.y * eps};
    }
    if (orientation(tip[0], tip[1], tip[2]) == 0) continue;
    Scene s2 = s;
    s2.triangles.push_back(ccw(tip[0], tip[1], tip[2]));
    UnionResult r = union_boundary(s2);
    if (!r.simple()) continue;
    if (r.polygon->side_count() != expected) continue;
    bool gone = true;
    for (int v : spec.engulfed)
      if (vertex_on_boundary(*r.polygon, p.vertices[v])) gone = false;
    if (!gone) continue;
    return s2;
  }
  throw CertificationFailed(
      "add_protruded: no offset scale down to 2^-60 certifies delta " +
      std::to_string(expected - m));
}

Scene family_9n6(int n) {
  if (n < 1) throw CertificationFailed("family_9n6: n must be >= 1");
  Scene s;
  s.triangles.push_back(ccw({rat(0), rat(0)}, {rat(8), rat(0)}, {rat(0), rat(8)}));
  const Triangle base = s.triangles[0];
  int last_good = 10;  // adaptive offset exponent carried across steps
  for (int step = 1; step < n; ++step) {
    // Tips sit on the three base-triangle sides at parameter 2^-step; each
    // later triangle nests closer to the corners, clear of every earlier tip.
    Rat t = inv_pow2(step);
    int m_before = 0;
    {
      UnionResult r = union_boundary(s);
      m_before = require_simple(r, "family_9n6").side_count();
    }
    bool done = false;
    for (int e = std::max(10, last_good); e <= kMaxHalvings + step && !done;
         ++e) {
      Rat eps = inv_pow2(e);
      Point tip[3];
      for (int k = 0; k < 3; ++k) {
        const Point& a = base.v[k];
        const Point& b = base.v[(k + 1) % 3];
        Point q = lerp(a, b, t);
        Point nrm = outward_normal(a, b);
        tip[k] = {q.x + nrm.x * eps, q.y + nrm.y * eps};
      }
      Scene s2 = s;
      s2.triangles.push_back(ccw(tip[0], tip[1], tip[2]));
      UnionResult r = union_boundary(s2);
      if (r.simple() && r.polygon->side_count() == m_before + 9) {
        s = s2;
        last_good = e;
        done = true;
      }
    }
    if (!done)
      throw CertificationFailed("family_9n6: step " + std::to_string(step) +
                                " failed to certify +9");
  }
  return s;
}

std::vector<Scene> family_11n11_ladder(int n_max) {
  if (n_max < 3)
    throw CertificationFailed("family_11n11: needs at least 3 triangles");
  // 22-gon base: hexagram plus one protrusion whose long edge clears a
  // notch of the star (+10).
  ProtrusionSpec third;
  third.sides = {11, 2, 6};
  third.params = {Rat(1, 2), Rat(1, 4), Rat(1, 2)};
  third.offsets = {Rat(1, 256), Rat(1, 256), Rat(1, 256)};
  third.engulfed = {1};
  std::vector<Scene> ladder;
  ladder.push_back(add_protruded(hexagram(), third));
  for (int n = 4; n <= n_max; ++n) ladder.push_back(inflate_any(ladder.back()));
  return ladder;
}

Scene family_11n11(int n) {
  if (n < 4) throw CertificationFailed("family_11n11: n must be >= 4");
  return family_11n11_ladder(n).back();
}

namespace {

// Stages of inflate_induction: element k holds the scene after k steps
// (element 0 is the input).
std::vector<Scene> inflate_stages(const Scene& s, int edge, int m) {
  if (m < 1) throw CertificationFailed("inflate_induction: m must be >= 1");
  UnionResult base = union_boundary(s);
  const AnnotatedPolygon& p0 = require_simple(base, "inflate_induction");
  int sides = p0.side_count();
  if (edge < 0 || edge >= sides)
    throw NoEligibleEdge("inflate_induction: side index out of range");
  Point e1 = p0.vertices[edge];
  Point e2 = p0.vertices[(edge + 1) % sides];
  if (detail::is_input_vertex(s, e1) || detail::is_input_vertex(s, e2))
    throw NoEligibleEdge(
        "inflate_induction: side touches a vertex of an input triangle");

  std::vector<Scene> stages{s};
  Scene cur = s;
  for (int step = 0; step < m; ++step) {
    UnionResult r = union_boundary(cur);
    const AnnotatedPolygon& p = require_simple(r, "inflate_induction");
    int mm = p.side_count();
    // Boundary pieces still lying on the anchor segment, longest first.
    std::vector<int> pieces;
    for (int k = 0; k < mm; ++k)
      if (on_segment(e1, e2, p.vertices[k]) &&
          on_segment(e1, e2, p.vertices[(k + 1) % mm]))
        pieces.push_back(k);
    std::stable_sort(pieces.begin(), pieces.end(), [&](int a, int b) {
      return p.sides[a].length_sq > p.sides[b].length_sq;
    });
    bool done = false;
    for (int piece : pieces) {
      if (auto next = try_inflation(cur, p, piece)) {
        cur = *next;
        stages.push_back(cur);
        done = true;
        break;
      }
    }
    if (!done)
      throw CertificationFailed("inflate_induction: step " +
                                std::to_string(step + 1) +
                                " found no certifiable +11 placement");
  }
  return stages;
}

}  // namespace

Scene inflate_induction(const Scene& s, int edge, int m) {
  return inflate_stages(s, edge, m).back();
}

std::string seed79_path() {
#ifdef POLITRIGON_DATA_DIR
  return std::string(POLITRIGON_DATA_DIR) + "/seed79.scene";
#else
  return "data/seed79.scene";
#endif
}

Scene seed79() {
  Scene s = load_scene(seed79_path());
  UnionResult r = union_boundary(s);
  if (!r.simple() || r.polygon->side_count() != 79)
    throw CertificationFailed("seed79: stored asset no longer certifies 79");
  return s;
}

std::vector<Scene> family_11n9_ladder(int n_max) {
  if (n_max < 9) throw CertificationFailed("family_11n9: n must be >= 9");
  Scene s = seed79();
  UnionResult r = union_boundary(s);
  const AnnotatedPolygon& p = require_simple(r, "family_11n9");
  std::vector<int> order = eligible_sides(s, p);
  if (order.empty())
    throw NoEligibleEdge("family_11n9: seed has no eligible side");
  // Anchor everything on the longest eligible side; fall back to the next
  // ones if the ladder stalls there.
  for (int e : order) {
    try {
      return inflate_stages(s, e, n_max - 8);
    } catch (const CertificationFailed&) {
      continue;
    }
  }
  throw CertificationFailed("family_11n9: no eligible side carries the ladder");
}

Scene family_11n9(int n) { return family_11n9_ladder(n).back(); }

Scene pinwheel(int n) {
  if (n < 2 || n % 3 == 0)
    throw CertificationFailed(
        "pinwheel: needs n >= 2 with n not divisible by 3");
  // 3n points on the unit circle in strict cyclic order, three per sector
  // of width 2 pi / n; triangle t uses points t, t+n, t+2n. The intra-sector
  // offsets below make the n = 5 and n = 8 unions meet the side-count upper
  // bound exactly.
  double sector = 2 * M_PI / n;
  double o1 = (n == 8) ? sector * 1 / 40 : sector * 1 / 36;
  double o2 = (n == 8) ? sector * 8 / 40 : sector * 8 / 36;
  std::vector<Point> pts(3 * n);
  for (int p = 0; p < 3 * n; ++p) {
    double theta = sector * (p / 3) + (p % 3 == 0 ? 0.0 : p % 3 == 1 ? o1 : o2);
    while (theta > M_PI) theta -= 2 * M_PI;
    // Exact point on the unit circle via the tangent half-angle map applied
    // to a dyadic approximation of tan(theta / 2).
    Rat u = dyadic_round(std::tan(theta / 2), 20);
    Rat den = 1 + u * u;
    pts[p] = {(1 - u * u) / den, (2 * u) / den};
  }
  Scene s;
  for (int t = 0; t < n; ++t)
    s.triangles.push_back(ccw(pts[t], pts[t + n], pts[t + 2 * n]));
  UnionResult r = union_boundary(s);
  require_simple(r, "pinwheel");
  return s;
}

}  // namespace politrigon

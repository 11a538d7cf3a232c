#include "politrigon/union_boundary.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "boundary_graph.hpp"

namespace politrigon {

namespace {

struct SourceEdge {
  int tri;
  int edge;
  Segment seg;
};

// Sorts p along seg by the (exact) projection onto the segment direction.
struct AlongLess {
  const Segment& seg;
  bool operator()(const Point& p, const Point& q) const {
    Rat tp = (p.x - seg.a.x) * (seg.b.x - seg.a.x) + (p.y - seg.a.y) * (seg.b.y - seg.a.y);
    Rat tq = (q.x - seg.a.x) * (seg.b.x - seg.a.x) + (q.y - seg.a.y) * (seg.b.y - seg.a.y);
    return tp < tq;
  }
};

}  // namespace

UnionResult union_boundary(const Scene& scene) {
  if (scene.triangles.empty()) throw std::invalid_argument("empty scene");
  for (const Triangle& t : scene.triangles)
    if (orientation(t.v[0], t.v[1], t.v[2]) <= 0)
      throw std::invalid_argument("scene triangle not counterclockwise");

  std::vector<SourceEdge> edges;
  for (int i = 0; i < scene.size(); ++i)
    for (int j = 0; j < 3; ++j) edges.push_back({i, j, scene.triangles[i].edge(j)});

  std::vector<detail::BoundaryPiece> pieces;
  for (const SourceEdge& se : edges) {
    // Split this edge at every point where another edge meets it.
    std::vector<Point> cuts = {se.seg.a, se.seg.b};
    for (const SourceEdge& other : edges) {
      if (other.tri == se.tri && other.edge == se.edge) continue;
      IntersectionKind k = intersect_segments(se.seg, other.seg);
      if (auto* pp = std::get_if<IntersectProper>(&k)) {
        cuts.push_back(pp->p);
      } else if (auto* tp = std::get_if<IntersectTouch>(&k)) {
        cuts.push_back(tp->p);
      } else if (auto* ov = std::get_if<IntersectOverlap>(&k)) {
        cuts.push_back(ov->s.a);
        cuts.push_back(ov->s.b);
      }
    }
    std::sort(cuts.begin(), cuts.end(), AlongLess{se.seg});
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Point& a = cuts[c];
      const Point& b = cuts[c + 1];
      Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      Point dir{b.x - a.x, b.y - a.y};

      // Local coverage of the two sides of this sub-segment at its midpoint.
      // Splitting guarantees the midpoint sits in the relative interior of
      // any input edge it touches, never on a triangle vertex.
      bool cov_left = false, cov_right = false;
      std::vector<std::pair<int, int>> left_contrib, right_contrib;
      for (int ti = 0; ti < scene.size(); ++ti) {
        const Triangle& t = scene.triangles[ti];
        PointSide side = point_vs_triangle(mid, t);
        if (side == PointSide::Outside) continue;
        if (side == PointSide::Inside) {
          cov_left = cov_right = true;
          continue;
        }
        for (int k = 0; k < 3; ++k) {
          Segment te = t.edge(k);
          if (!on_segment(mid, te)) continue;
          // Collinear with our sub-segment by construction; the triangle
          // interior lies to the left of its own directed edge.
          Rat along = dir.x * (te.b.x - te.a.x) + dir.y * (te.b.y - te.a.y);
          if (sign(along) > 0) {
            cov_left = true;
            left_contrib.emplace_back(ti, k);
          } else {
            cov_right = true;
            right_contrib.emplace_back(ti, k);
          }
          break;
        }
      }

      assert(cov_left || cov_right);
      if (cov_left && cov_right) continue;  // interior of the union
      pieces.push_back(detail::BoundaryPiece{
          a, b, cov_left ? std::move(left_contrib) : std::move(right_contrib)});
    }
  }

  return detail::assemble_boundary(std::move(pieces), scene.size());
}

int side_count(const AnnotatedPolygon& p) { return p.side_count(); }

std::vector<int> contributions(const AnnotatedPolygon& p) {
  std::vector<int> l(p.n, 0);
  for (const Side& s : p.sides) ++l[s.owner];
  return l;
}

Rat area(const AnnotatedPolygon& p) {
  Rat s = 0;
  size_t m = p.vertices.size();
  for (size_t i = 0; i < m; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % m];
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2;
}

Rat sum_length_sq(const AnnotatedPolygon& p) {
  Rat s = 0;
  for (const Side& side : p.sides) s += side.length_sq;
  return s;
}

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::Hole:
      return "Hole";
    case RejectReason::DisconnectedInterior:
      return "DisconnectedInterior";
    case RejectReason::PinchPoint:
      return "PinchPoint";
    case RejectReason::DegenerateContact:
      return "DegenerateContact";
  }
  return "?";
}

std::vector<int> certify_batch(const std::vector<Scene>& scenes, int threads) {
  std::vector<int> out(scenes.size(), -1);
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(scenes.size()); ++i) {
    UnionResult r = union_boundary(scenes[i]);
    out[i] = r.simple() ? r.polygon->side_count() : -1;
  }
  return out;
}

std::vector<int> certify_batch_serial(const std::vector<Scene>& scenes) {
  std::vector<int> out(scenes.size(), -1);
  for (size_t i = 0; i < scenes.size(); ++i) {
    UnionResult r = union_boundary(scenes[i]);
    out[i] = r.simple() ? r.polygon->side_count() : -1;
  }
  return out;
}

}  // namespace politrigon

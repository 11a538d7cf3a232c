#include "boundary_graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace politrigon::detail {

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

Rat signed_area2(const std::vector<Point>& ring) {
  Rat s = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

}  // namespace

bool point_in_cycle(const Point& p, const std::vector<Point>& cycle) {
  bool inside = false;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % cycle.size()];
    if ((a.x > p.x) != (b.x > p.x)) {
      // y-coordinate of the edge at x = p.x, compared against p.y.
      Rat y = a.y + (p.x - a.x) * (b.y - a.y) / (b.x - a.x);
      if (y > p.y) inside = !inside;
    }
  }
  return inside;
}

UnionResult assemble_boundary(std::vector<BoundaryPiece> pieces, int n_triangles) {
  UnionResult res;
  if (pieces.empty()) {
    res.rejection = Rejection{RejectReason::DegenerateContact, Point{Rat(0), Rat(0)}};
    return res;
  }

  // De-duplicate geometrically identical pieces (overlapping collinear input
  // edges yield the same piece from several source segments).
  std::map<std::pair<Point, Point>, size_t, bool (*)(const std::pair<Point, Point>&,
                                                     const std::pair<Point, Point>&)>
      seen([](const std::pair<Point, Point>& l, const std::pair<Point, Point>& r) {
        if (lex_less(l.first, r.first)) return true;
        if (lex_less(r.first, l.first)) return false;
        return lex_less(l.second, r.second);
      });
  std::vector<BoundaryPiece> uniq;
  for (auto& pc : pieces) {
    Point lo = pc.a, hi = pc.b;
    if (lex_less(hi, lo)) std::swap(lo, hi);
    auto key = std::make_pair(lo, hi);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, uniq.size());
      uniq.push_back(BoundaryPiece{lo, hi, pc.contributors});
    } else {
      auto& dst = uniq[it->second].contributors;
      dst.insert(dst.end(), pc.contributors.begin(), pc.contributors.end());
    }
  }

  std::map<Point, int, PointLess> vid;
  std::vector<Point> verts;
  auto id_of = [&](const Point& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(verts.size());
    vid.emplace(p, id);
    verts.push_back(p);
    return id;
  };
  struct Adj {
    int to;
    int piece;
  };
  std::vector<std::vector<Adj>> adj;
  for (size_t k = 0; k < uniq.size(); ++k) {
    int u = id_of(uniq[k].a);
    int v = id_of(uniq[k].b);
    adj.resize(verts.size());
    adj[u].push_back({v, static_cast<int>(k)});
    adj[v].push_back({u, static_cast<int>(k)});
  }
  adj.resize(verts.size());

  // Degree checks. Boundary vertices of a region have even degree; >= 4
  // means the curve revisits the point.
  std::optional<Point> pinch;
  for (size_t i = 0; i < verts.size(); ++i) {
    size_t d = adj[i].size();
    if (d != 2) {
      if (!pinch || lex_less(verts[i], *pinch)) pinch = verts[i];
    }
  }
  if (pinch) {
    res.rejection = Rejection{RejectReason::PinchPoint, *pinch};
    return res;
  }

  // All degrees are exactly 2: decompose into disjoint cycles.
  std::vector<int> cyc_of(verts.size(), -1);
  std::vector<std::vector<int>> cycles;  // vertex ids in walk order
  std::vector<std::vector<int>> cycle_pieces;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (cyc_of[i] != -1) continue;
    int c = static_cast<int>(cycles.size());
    cycles.emplace_back();
    cycle_pieces.emplace_back();
    int cur = static_cast<int>(i);
    int prev_piece = -1;
    do {
      cyc_of[cur] = c;
      cycles[c].push_back(cur);
      const Adj& step = adj[cur][0].piece != prev_piece ? adj[cur][0] : adj[cur][1];
      cycle_pieces[c].push_back(step.piece);
      prev_piece = step.piece;
      cur = step.to;
    } while (cur != static_cast<int>(i));
  }

  if (cycles.size() > 1) {
    // Nesting: a cycle is "outer" if it lies inside no other cycle.
    std::vector<std::vector<Point>> rings(cycles.size());
    for (size_t c = 0; c < cycles.size(); ++c)
      for (int v : cycles[c]) rings[c].push_back(verts[v]);
    std::vector<bool> nested(cycles.size(), false);
    for (size_t c = 0; c < cycles.size(); ++c) {
      for (size_t d = 0; d < cycles.size() && !nested[c]; ++d) {
        if (c == d) continue;
        if (point_in_cycle(rings[c][0], rings[d])) nested[c] = true;
      }
    }
    int outer_count = 0;
    for (bool b : nested)
      if (!b) ++outer_count;

    // Witnesses are corner points so that both union implementations name
    // the same point regardless of how finely they subdivided the boundary.
    auto lex_min_of = [&](size_t c) {
      const auto& ring = rings[c];
      std::optional<Point> m;
      for (size_t i = 0; i < ring.size(); ++i) {
        const Point& prev = ring[(i + ring.size() - 1) % ring.size()];
        const Point& next = ring[(i + 1) % ring.size()];
        if (orientation(prev, ring[i], next) == 0) continue;
        if (!m || lex_less(ring[i], *m)) m = ring[i];
      }
      return m ? *m : ring[0];
    };
    if (outer_count >= 2) {
      // Which outer cycle holds the global lexicographic minimum keeps the
      // "main region" role; the witness comes from the others.
      size_t main_c = 0;
      Point global_min = lex_min_of(0);
      for (size_t c = 1; c < cycles.size(); ++c) {
        Point m = lex_min_of(c);
        if (lex_less(m, global_min)) {
          global_min = m;
          main_c = c;
        }
      }
      std::optional<Point> w;
      for (size_t c = 0; c < cycles.size(); ++c) {
        if (c == main_c || nested[c]) continue;
        Point m = lex_min_of(c);
        if (!w || lex_less(m, *w)) w = m;
      }
      res.rejection = Rejection{RejectReason::DisconnectedInterior, *w};
    } else {
      std::optional<Point> w;
      for (size_t c = 0; c < cycles.size(); ++c) {
        if (!nested[c]) continue;
        Point m = lex_min_of(c);
        if (!w || lex_less(m, *w)) w = m;
      }
      res.rejection = Rejection{RejectReason::Hole, *w};
    }
    return res;
  }

  // Single Jordan cycle: orient counterclockwise and start the walk at the
  // lexicographically smallest vertex.
  std::vector<int> walk = cycles[0];
  std::vector<int> walk_pieces = cycle_pieces[0];
  {
    std::vector<Point> ring;
    for (int v : walk) ring.push_back(verts[v]);
    if (sign(signed_area2(ring)) < 0) {
      std::reverse(walk.begin(), walk.end());
      std::reverse(walk_pieces.begin(), walk_pieces.end());
      std::rotate(walk.begin(), walk.end() - 1, walk.end());
    }
    size_t best = 0;
    for (size_t i = 1; i < walk.size(); ++i)
      if (lex_less(verts[walk[i]], verts[walk[best]])) best = i;
    std::rotate(walk.begin(), walk.begin() + best, walk.end());
    std::rotate(walk_pieces.begin(), walk_pieces.begin() + best, walk_pieces.end());
  }

  size_t m = walk.size();
  auto vertex_at = [&](size_t i) -> const Point& { return verts[walk[i % m]]; };

  // Corners are the vertices where the boundary actually turns.
  std::vector<size_t> corners;
  for (size_t i = 0; i < m; ++i) {
    if (orientation(vertex_at(i + m - 1), vertex_at(i), vertex_at(i + 1)) != 0)
      corners.push_back(i);
  }
  if (corners.size() < 3) {
    res.rejection = Rejection{RejectReason::DegenerateContact, vertex_at(0)};
    return res;
  }

  AnnotatedPolygon poly;
  poly.n = n_triangles;
  for (size_t ci = 0; ci < corners.size(); ++ci) {
    size_t from = corners[ci];
    size_t to = corners[(ci + 1) % corners.size()];
    poly.vertices.push_back(vertex_at(from));
    Side side;
    std::set<std::pair<int, int>> contrib;
    for (size_t i = from; i % m != to; ++i)
      for (auto& ce : uniq[walk_pieces[i % m]].contributors) contrib.insert(ce);
    assert(!contrib.empty());
    side.owner = contrib.begin()->first;
    side.edge_index = contrib.begin()->second;
    side.length_sq = dist_sq(vertex_at(from), vertex_at(to));
    poly.sides.push_back(std::move(side));
  }
  // Rotate so the polygon starts at its lexicographically smallest corner.
  {
    size_t best = 0;
    for (size_t i = 1; i < poly.vertices.size(); ++i)
      if (lex_less(poly.vertices[i], poly.vertices[best])) best = i;
    std::rotate(poly.vertices.begin(), poly.vertices.begin() + best, poly.vertices.end());
    std::rotate(poly.sides.begin(), poly.sides.begin() + best, poly.sides.end());
  }
  res.polygon = std::move(poly);
  return res;
}

}  // namespace politrigon::detail

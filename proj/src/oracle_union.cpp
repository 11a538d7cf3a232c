#include "politrigon/oracle_union.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "boundary_graph.hpp"

namespace politrigon {

namespace {

struct EdgeRef {
  int tri;
  int edge;
  Segment seg;  // normalized so seg.a.x <= seg.b.x
};

Rat y_at(const EdgeRef& e, const Rat& x) {
  return e.seg.a.y + (x - e.seg.a.x) * (e.seg.b.y - e.seg.a.y) / (e.seg.b.x - e.seg.a.x);
}

// One triangle's cross-section over a slab: its lower and upper edge.
struct Trap {
  int tri;
  EdgeRef low;
  EdgeRef high;
};

// A maximal covered y-interval of one slab.
struct Band {
  EdgeRef low;
  EdgeRef high;
  std::vector<std::pair<int, int>> low_contrib;
  std::vector<std::pair<int, int>> high_contrib;
};

}  // namespace

UnionResult oracle_union(const Scene& scene) {
  if (scene.triangles.empty()) throw std::invalid_argument("empty scene");
  for (const Triangle& t : scene.triangles)
    if (orientation(t.v[0], t.v[1], t.v[2]) <= 0)
      throw std::invalid_argument("scene triangle not counterclockwise");

  std::vector<EdgeRef> all_edges;
  for (int i = 0; i < scene.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      Segment s = scene.triangles[i].edge(j);
      if (s.b.x < s.a.x) std::swap(s.a, s.b);
      all_edges.push_back({i, j, s});
    }

  // Event abscissae: vertices plus every point where two edges meet.
  std::vector<Rat> xs;
  for (const EdgeRef& e : all_edges) {
    xs.push_back(e.seg.a.x);
    xs.push_back(e.seg.b.x);
  }
  for (size_t i = 0; i < all_edges.size(); ++i)
    for (size_t j = i + 1; j < all_edges.size(); ++j) {
      IntersectionKind k = intersect_segments(all_edges[i].seg, all_edges[j].seg);
      if (auto* pp = std::get_if<IntersectProper>(&k)) {
        xs.push_back(pp->p.x);
      } else if (auto* tp = std::get_if<IntersectTouch>(&k)) {
        xs.push_back(tp->p.x);
      } else if (auto* ov = std::get_if<IntersectOverlap>(&k)) {
        xs.push_back(ov->s.a.x);
        xs.push_back(ov->s.b.x);
      }
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Per-slab covered bands.
  std::vector<std::vector<Band>> slab_bands(xs.size() == 0 ? 0 : xs.size() - 1);
  for (size_t si = 0; si + 1 < xs.size(); ++si) {
    const Rat& xl = xs[si];
    const Rat& xr = xs[si + 1];
    Rat xm = (xl + xr) / 2;

    std::vector<Trap> traps;
    for (int ti = 0; ti < scene.size(); ++ti) {
      const Triangle& t = scene.triangles[ti];
      std::vector<EdgeRef> span;
      for (int j = 0; j < 3; ++j) {
        Segment s = t.edge(j);
        if (s.b.x < s.a.x) std::swap(s.a, s.b);
        if (s.a.x == s.b.x) continue;  // vertical edge, zero x-extent
        if (s.a.x <= xl && xr <= s.b.x) span.push_back({ti, j, s});
      }
      if (span.empty()) continue;
      // No vertex lies strictly inside a slab, so a triangle crossing the
      // slab presents exactly its lower and upper edge.
      assert(span.size() == 2);
      if (y_at(span[0], xm) > y_at(span[1], xm)) std::swap(span[0], span[1]);
      traps.push_back({ti, span[0], span[1]});
    }
    if (traps.empty()) continue;

    std::sort(traps.begin(), traps.end(), [&](const Trap& a, const Trap& b) {
      return y_at(a.low, xm) < y_at(b.low, xm);
    });

    std::vector<Band>& bands = slab_bands[si];
    for (size_t i = 0; i < traps.size();) {
      Band band;
      band.low = traps[i].low;
      band.high = traps[i].high;
      Rat top = y_at(band.high, xm);
      size_t j = i + 1;
      while (j < traps.size() && y_at(traps[j].low, xm) <= top) {
        Rat t2 = y_at(traps[j].high, xm);
        if (t2 > top) {
          top = t2;
          band.high = traps[j].high;
        }
        ++j;
      }
      // Contributors: every triangle in the group whose corresponding edge
      // runs along the band boundary (equal value at xm means same line,
      // since edges do not cross inside a slab).
      Rat bot = y_at(band.low, xm);
      for (size_t k = i; k < j; ++k) {
        if (y_at(traps[k].low, xm) == bot)
          band.low_contrib.emplace_back(traps[k].tri, traps[k].low.edge);
        if (y_at(traps[k].high, xm) == top)
          band.high_contrib.emplace_back(traps[k].tri, traps[k].high.edge);
      }
      bands.push_back(std::move(band));
      i = j;
    }
  }

  std::vector<detail::BoundaryPiece> pieces;
  for (size_t si = 0; si + 1 < xs.size(); ++si) {
    for (const Band& b : slab_bands[si]) {
      Point bl{xs[si], y_at(b.low, xs[si])}, br{xs[si + 1], y_at(b.low, xs[si + 1])};
      Point tl{xs[si], y_at(b.high, xs[si])}, tr{xs[si + 1], y_at(b.high, xs[si + 1])};
      pieces.push_back({bl, br, b.low_contrib});
      pieces.push_back({tl, tr, b.high_contrib});
    }
  }

  // Vertical boundary at each event line: symmetric difference of the
  // coverage to the left and to the right.
  for (size_t ei = 0; ei < xs.size(); ++ei) {
    const Rat& x = xs[ei];
    struct Delta {
      Rat y;
      int left;
      int right;
    };
    std::vector<Delta> deltas;
    if (ei > 0)
      for (const Band& b : slab_bands[ei - 1]) {
        deltas.push_back({y_at(b.low, x), +1, 0});
        deltas.push_back({y_at(b.high, x), -1, 0});
      }
    if (ei + 1 < xs.size())
      for (const Band& b : slab_bands[ei]) {
        deltas.push_back({y_at(b.low, x), 0, +1});
        deltas.push_back({y_at(b.high, x), 0, -1});
      }
    if (deltas.empty()) continue;
    std::sort(deltas.begin(), deltas.end(),
              [](const Delta& a, const Delta& b) { return a.y < b.y; });

    int covl = 0, covr = 0;
    for (size_t k = 0; k + 1 < deltas.size(); ++k) {
      covl += deltas[k].left;
      covr += deltas[k].right;
      const Rat& y0 = deltas[k].y;
      const Rat& y1 = deltas[k + 1].y;
      if (y0 == y1) continue;
      if ((covl > 0) == (covr > 0)) continue;
      // Exposed vertical stretch; it lies on vertical input edges of the
      // covering side. Abutting vertical edges may each carry only part of
      // it, so split at their endpoints before attributing owners.
      std::vector<Rat> splits = {y0, y1};
      for (int ti = 0; ti < scene.size(); ++ti)
        for (int j = 0; j < 3; ++j) {
          Segment s = scene.triangles[ti].edge(j);
          if (s.a.x != x || s.b.x != x) continue;
          if (y0 < s.a.y && s.a.y < y1) splits.push_back(s.a.y);
          if (y0 < s.b.y && s.b.y < y1) splits.push_back(s.b.y);
        }
      std::sort(splits.begin(), splits.end());
      splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
      for (size_t si2 = 0; si2 + 1 < splits.size(); ++si2) {
        const Rat& a = splits[si2];
        const Rat& b = splits[si2 + 1];
        std::vector<std::pair<int, int>> contrib;
        for (int ti = 0; ti < scene.size(); ++ti)
          for (int j = 0; j < 3; ++j) {
            Segment s = scene.triangles[ti].edge(j);
            if (s.a.x != x || s.b.x != x) continue;
            Rat lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
            if (lo <= a && b <= hi) contrib.emplace_back(ti, j);
          }
        assert(!contrib.empty());
        pieces.push_back({Point{x, a}, Point{x, b}, std::move(contrib)});
      }
    }
  }

  return detail::assemble_boundary(std::move(pieces), scene.size());
}

}  // namespace politrigon

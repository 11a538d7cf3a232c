#pragma once

#include <string>

#include "politrigon/union_boundary.hpp"

namespace politrigon {

struct RenderOptions {
  int width = 800;
  int height = 800;
  bool label_vertices = false;
};

// SVG 1.1 document: the triangles as translucent filled paths; when the
// union is simple, the boundary is stroked on top (with vertex numbers if
// requested), otherwise the rejection witness point is marked. Output is
// deterministic for fixed input and options.
std::string render_svg(const Scene& s, const RenderOptions& opt = {});

}  // namespace politrigon

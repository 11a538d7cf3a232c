#include "politrigon/render.hpp"

#include <algorithm>
#include <sstream>

namespace politrigon {

namespace {

const char* kFills[] = {"#b5651d", "#4169e1", "#2e8b57", "#b22222",
                        "#8a2be2", "#ff8c00", "#008b8b", "#c71585"};

struct Mapper {
  double sx = 1, sy = 1, ox = 0, oy = 0;

  double x(const Point& p) const { return to_double(p.x) * sx + ox; }
  double y(const Point& p) const { return to_double(p.y) * sy + oy; }
};

Mapper fit(const Scene& s, const RenderOptions& opt) {
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const Triangle& t : s.triangles)
    for (const Point& v : t.v) {
      lo_x = std::min(lo_x, to_double(v.x));
      hi_x = std::max(hi_x, to_double(v.x));
      lo_y = std::min(lo_y, to_double(v.y));
      hi_y = std::max(hi_y, to_double(v.y));
    }
  if (lo_x > hi_x) lo_x = hi_x = lo_y = hi_y = 0;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double margin = 0.05 * std::min(opt.width, opt.height);
  double scale = (std::min(opt.width, opt.height) - 2 * margin) / span;
  Mapper m;
  m.sx = scale;
  m.sy = -scale;  // y up in scene coordinates, down in SVG
  m.ox = margin - lo_x * scale + (opt.width - 2 * margin - (hi_x - lo_x) * scale) / 2;
  m.oy = margin + hi_y * scale + (opt.height - 2 * margin - (hi_y - lo_y) * scale) / 2;
  return m;
}

void emit_coord(std::ostringstream& out, double v) {
  char buf[40];
  snprintf(buf, sizeof buf, "%.3f", v);
  out << buf;
}

}  // namespace

std::string render_svg(const Scene& s, const RenderOptions& opt) {
  Mapper m = fit(s, opt);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\""
      << opt.width << "\" height=\"" << opt.height << "\">\n";
  for (int i = 0; i < s.size(); ++i) {
    const Triangle& t = s.triangles[i];
    out << "  <path d=\"";
    for (int k = 0; k < 3; ++k) {
      out << (k ? " L " : "M ");
      emit_coord(out, m.x(t.v[k]));
      out << ' ';
      emit_coord(out, m.y(t.v[k]));
    }
    out << " Z\" fill=\"" << kFills[i % 8]
        << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
  }
  UnionResult r = union_boundary(s);
  if (r.simple()) {
    const AnnotatedPolygon& p = *r.polygon;
    out << "  <path d=\"";
    for (int k = 0; k < p.side_count(); ++k) {
      out << (k ? " L " : "M ");
      emit_coord(out, m.x(p.vertices[k]));
      out << ' ';
      emit_coord(out, m.y(p.vertices[k]));
    }
    out << " Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    if (opt.label_vertices)
      for (int k = 0; k < p.side_count(); ++k) {
        out << "  <text x=\"";
        emit_coord(out, m.x(p.vertices[k]) + 4);
        out << "\" y=\"";
        emit_coord(out, m.y(p.vertices[k]) - 4);
        out << "\" font-size=\"10\">" << k << "</text>\n";
      }
  } else if (r.rejection) {
    out << "  <circle cx=\"";
    emit_coord(out, m.x(r.rejection->witness));
    out << "\" cy=\"";
    emit_coord(out, m.y(r.rejection->witness));
    out << "\" r=\"5\" fill=\"none\" stroke=\"#f00\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace politrigon

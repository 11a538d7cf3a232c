#pragma once

#include <stdexcept>
#include <string>

#include "politrigon/scene.hpp"

namespace politrigon {

// Scene file format, version 1:
//
//   politrigon-scene 1
//   <n>
//   x0 y0 x1 y1 x2 y2        (one line per triangle, n lines)
//   # optional trailing comments
//
// Coordinates are exact rationals, written "p/q" (or "p" when q = 1) and
// accepted on input also in decimal form ("0.25" reads as 1/4).

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
};

struct DegenerateTriangle : std::runtime_error {
  int index;  // 1-based triangle number in the file
  explicit DegenerateTriangle(int index)
      : std::runtime_error("triangle " + std::to_string(index) +
                           " has collinear vertices"),
        index(index) {}
};

// Parse one rational token ("p/q", "p", or a decimal like "-1.25").
Rat parse_rational(const std::string& token);

Scene parse_scene(const std::string& text);
std::string write_scene(const Scene& s);

Scene load_scene(const std::string& path);
void save_scene(const Scene& s, const std::string& path);

}  // namespace politrigon

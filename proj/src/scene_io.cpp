#include "politrigon/scene_io.hpp"

#include <fstream>
#include <sstream>

namespace politrigon {

namespace {

// Splits a line into whitespace-separated tokens with their column numbers.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

}  // namespace

Rat parse_rational(const std::string& token) {
  auto q = parse_rat(token);
  if (!q) throw ParseError(0, 0, "bad rational '" + token + "'");
  return *q;
}

Scene parse_scene(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, 1, "empty file");
  if (line != "politrigon-scene 1")
    throw ParseError(lineno, 1, "expected header 'politrigon-scene 1'");

  if (!next_line()) throw ParseError(lineno + 1, 1, "missing triangle count");
  auto count_toks = tokenize(line);
  if (count_toks.size() != 1)
    throw ParseError(lineno, 1, "expected a single triangle count");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(count_toks[0].first, &used);
    if (used != count_toks[0].first.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError(lineno, count_toks[0].second, "bad triangle count");
  }
  if (n < 0) throw ParseError(lineno, count_toks[0].second, "negative count");

  Scene s;
  for (int t = 0; t < n; ++t) {
    if (!next_line())
      throw ParseError(lineno + 1, 1,
                       "expected " + std::to_string(n) + " triangles, got " +
                           std::to_string(t));
    auto toks = tokenize(line);
    if (toks.size() != 6)
      throw ParseError(lineno, 1, "expected 6 rationals per triangle");
    Rat c[6];
    for (int k = 0; k < 6; ++k) {
      auto q = parse_rat(toks[k].first);
      if (!q)
        throw ParseError(lineno, toks[k].second,
                         "bad rational '" + toks[k].first + "'");
      c[k] = *q;
    }
    Triangle tr{{Point{c[0], c[1]}, Point{c[2], c[3]}, Point{c[4], c[5]}}};
    if (orientation(tr.v[0], tr.v[1], tr.v[2]) == 0)
      throw DegenerateTriangle(t + 1);
    if (orientation(tr.v[0], tr.v[1], tr.v[2]) < 0) std::swap(tr.v[1], tr.v[2]);
    s.triangles.push_back(tr);
  }

  while (next_line()) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].first[0] != '#')
      throw ParseError(lineno, toks[0].second,
                       "unexpected content after triangle data");
  }
  return s;
}

std::string write_scene(const Scene& s) {
  std::ostringstream out;
  out << "politrigon-scene 1\n" << s.size() << "\n";
  for (const Triangle& t : s.triangles) {
    for (int k = 0; k < 3; ++k) {
      if (k) out << ' ';
      out << rat_to_string(t.v[k].x) << ' ' << rat_to_string(t.v[k].y);
    }
    out << '\n';
  }
  return out.str();
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scene file: " + path);
  out << write_scene(s);
}

}  // namespace politrigon

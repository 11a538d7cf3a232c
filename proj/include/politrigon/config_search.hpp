#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "politrigon/union_boundary.hpp"

namespace politrigon {

// Cyclic configurations: 3n points on the unit circle in strictly
// increasing angular order, triangle i spanning points i, n+i, 2n+i
// (0-based). The configuration is described by the 3n positive gaps
// between consecutive points; the first point sits at angle 0.
struct AngleConfig {
  int n = 0;
  std::vector<double> gaps;  // 3n entries, normalized to sum 2 pi

  std::vector<double> angles() const;  // prefix sums, angles()[0] = 0
};

// Thrown internally when rationalization collapses two points; callers of
// angles_to_scene never see it because precision is raised automatically.
struct PrecisionLoss : std::runtime_error {
  explicit PrecisionLoss(const std::string& what) : std::runtime_error(what) {}
};

// Rational scene for the configuration. Every vertex lies exactly on the
// unit circle: the tangent half-angle of each point is rounded to a dyadic
// rational with `bits` fractional bits and mapped back. Strict cyclic order
// is re-verified exactly on the rational points; on a collision the
// precision doubles (up to 4x) before giving up.
Scene angles_to_scene(const AngleConfig& c, int bits = 40);

// Side count of the certified union, or -1 when the union is not a simple
// polygon.
int score(const AngleConfig& c);

struct SearchTrace {
  long evaluations = 0;
  long improvements = 0;
  int restarts = 0;
};

struct SearchOutcome {
  AngleConfig best;
  int best_m = -1;
  Scene scene;                    // rationalized best configuration
  AnnotatedPolygon certificate;   // exact union of `scene`
  SearchTrace trace;
};

struct SearchOptions {
  long budget = 20000;   // certification count
  int restarts = 4;
  unsigned seed = 1;
  int threads = 0;                       // 0 = library default
  std::optional<AngleConfig> seed_template;  // mixed into restarts 50/50
};

// Simulated-annealing hill climb over gap vectors maximizing the certified
// side count. Floating point proposes, exact arithmetic certifies every
// acceptance. Deterministic for a fixed seed.
SearchOutcome search_max_sides(int n, const SearchOptions& opt = {});

// area / sum of squared side lengths; exact and similarity-invariant.
Rat canonical_score(const AnnotatedPolygon& p);

// Derivative-free pattern search on the gaps maximizing canonical_score
// while keeping the certified side count equal to start.best_m; moves that
// change it are rejected. The score trace is non-decreasing.
SearchOutcome optimize_canonical(const SearchOutcome& start, long budget);

}  // namespace politrigon

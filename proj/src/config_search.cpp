#include "politrigon/config_search.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace politrigon {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

std::vector<double> normalized(std::vector<double> gaps) {
  double sum = 0;
  for (double g : gaps) sum += g;
  for (double& g : gaps) g *= kTau / sum;
  return gaps;
}

Triangle ccw(Point a, Point b, Point c) {
  if (orientation(a, b, c) < 0) std::swap(b, c);
  return Triangle{{a, b, c}};
}

// Exact on-circle point for the dyadic tangent half-angle u:
// ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)).
Point circle_point(const Rat& u) {
  Rat den = 1 + u * u;
  return {(1 - u * u) / den, (2 * u) / den};
}

Scene scene_attempt(const AngleConfig& c, int bits) {
  int pts = 3 * c.n;
  std::vector<Rat> half(pts);
  std::vector<bool> wrapped(pts);  // true when theta was shifted by -2 pi
  std::vector<double> ang = c.angles();
  for (int p = 0; p < pts; ++p) {
    double theta = ang[p];
    bool wrap = theta > M_PI;
    if (wrap) theta -= kTau;
    half[p] = dyadic_round(std::tan(theta / 2), bits);
    wrapped[p] = wrap;
  }
  // The map theta -> tan(theta/2) is increasing on (-pi, pi), so strict
  // cyclic order of the angles is exactly strict increase of u within each
  // of the two wrap classes, with the wrapped block (negative angles)
  // following the unwrapped one.
  for (int p = 0; p + 1 < pts; ++p) {
    if (!wrapped[p] && wrapped[p + 1]) continue;  // the single wrap point
    if (wrapped[p] && !wrapped[p + 1])
      throw PrecisionLoss("angles leave strictly increasing order");
    if (!(half[p] < half[p + 1]))
      throw PrecisionLoss("rationalization collapsed neighbouring points");
  }
  Scene s;
  for (int t = 0; t < c.n; ++t)
    s.triangles.push_back(ccw(circle_point(half[t]),
                              circle_point(half[t + c.n]),
                              circle_point(half[t + 2 * c.n])));
  return s;
}

struct Candidate {
  AngleConfig config;
  int m = -1;
  double min_gap = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.m != b.m) return a.m > b.m;
  return a.min_gap > b.min_gap;  // better conditioned for later optimization
}

double min_gap_of(const AngleConfig& c) {
  double g = kTau;
  for (double x : c.gaps) g = std::min(g, x);
  return g;
}

AngleConfig uniform_config(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  AngleConfig c;
  c.n = n;
  c.gaps.resize(3 * n);
  for (double& g : c.gaps) g = u(rng);
  c.gaps = normalized(c.gaps);
  return c;
}

AngleConfig perturbed(const AngleConfig& base, double sigma,
                      std::mt19937& rng) {
  std::normal_distribution<double> nd(0.0, sigma);
  AngleConfig c = base;
  for (double& g : c.gaps) g = std::max(1e-7, g * std::exp(nd(rng)));
  c.gaps = normalized(c.gaps);
  return c;
}

// One annealing worker; consumes its share of the budget.
Candidate anneal(int n, long budget, unsigned seed,
                 const std::optional<AngleConfig>& seed_template,
                 SearchTrace& trace) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Candidate best;
  best.config.n = n;

  long evals = 0;
  int restart = 0;
  while (evals < budget) {
    // Template-seeded restarts mix 50/50 with uniform random gaps; the very
    // first restart replays the template as-is so its score is never lost.
    AngleConfig cur;
    if (seed_template && restart % 2 == 0)
      cur = restart == 0 ? *seed_template : perturbed(*seed_template, 0.03, rng);
    else
      cur = uniform_config(n, rng);
    ++restart;
    int cur_m = score(cur);
    ++evals;
    {
      Candidate cand{cur, cur_m, min_gap_of(cur)};
      if (better(cand, best)) best = cand;
    }
    double temp = 2.0;
    long stale = 0;
    while (evals < budget && stale < 10000) {
      std::uniform_int_distribution<int> pick(0, 3 * n - 1);
      AngleConfig next = cur;
      int i = pick(rng);
      std::normal_distribution<double> nd(0.0, 0.25 * temp + 0.002);
      next.gaps[i] = std::max(1e-7, next.gaps[i] * std::exp(nd(rng)));
      next.gaps = normalized(next.gaps);
      int m = score(next);
      ++evals;
      double delta = m - cur_m;
      if (delta >= 0 || unit(rng) < std::exp(delta / temp)) {
        if (m > cur_m) {
          stale = 0;
          ++trace.improvements;
        } else {
          ++stale;
        }
        cur = next;
        cur_m = m;
        Candidate cand{cur, cur_m, min_gap_of(cur)};
        if (better(cand, best)) best = cand;
      } else {
        ++stale;
      }
      temp *= 0.9995;  // geometric cooling
    }
  }
  trace.evaluations += evals;
  trace.restarts += restart;
  return best;
}

}  // namespace

std::vector<double> AngleConfig::angles() const {
  std::vector<double> a(gaps.size());
  double acc = 0;
  for (size_t i = 0; i < gaps.size(); ++i) {
    a[i] = acc;
    acc += gaps[i];
  }
  return a;
}

Scene angles_to_scene(const AngleConfig& c, int bits) {
  if (c.n < 1 || static_cast<int>(c.gaps.size()) != 3 * c.n)
    throw std::invalid_argument("angles_to_scene: need 3n gaps");
  std::string last = "";
  for (int attempt = 0; attempt < 3; ++attempt, bits *= 2) {
    try {
      return scene_attempt(c, bits);
    } catch (const PrecisionLoss& e) {
      last = e.what();
    }
  }
  throw PrecisionLoss(last);
}

int score(const AngleConfig& c) {
  Scene s;
  try {
    s = angles_to_scene(c);
  } catch (const PrecisionLoss&) {
    return -1;
  }
  UnionResult r = union_boundary(s);
  return r.simple() ? r.polygon->side_count() : -1;
}

SearchOutcome search_max_sides(int n, const SearchOptions& opt) {
  int workers = std::max(1, opt.restarts);
  std::vector<Candidate> found(workers);
  std::vector<SearchTrace> traces(workers);
  long share = std::max<long>(1, opt.budget / workers);
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#pragma omp parallel for schedule(dynamic, 1)
  for (int w = 0; w < workers; ++w)
    found[w] = anneal(n, share, opt.seed + 1000003u * w, opt.seed_template,
                      traces[w]);

  // Deterministic merge regardless of thread schedule.
  Candidate best = found[0];
  for (int w = 1; w < workers; ++w)
    if (better(found[w], best)) best = found[w];

  SearchOutcome out;
  out.best = best.config;
  out.best_m = best.m;
  for (const SearchTrace& t : traces) {
    out.trace.evaluations += t.evaluations;
    out.trace.improvements += t.improvements;
    out.trace.restarts += t.restarts;
  }
  if (best.m >= 0) {
    out.scene = angles_to_scene(best.config);
    UnionResult r = union_boundary(out.scene);
    if (!r.simple() || r.polygon->side_count() != best.m)
      throw std::logic_error("search_max_sides: certificate mismatch");
    out.certificate = *r.polygon;
  }
  return out;
}

Rat canonical_score(const AnnotatedPolygon& p) {
  return area(p) / sum_length_sq(p);
}

SearchOutcome optimize_canonical(const SearchOutcome& start, long budget) {
  SearchOutcome cur = start;
  if (cur.best_m < 0) return cur;
  Rat cur_score = canonical_score(cur.certificate);
  int dims = static_cast<int>(cur.best.gaps.size());
  double step = 0.02;
  long evals = 0;
  while (evals < budget && step > 1e-9) {
    bool improved = false;
    for (int i = 0; i < dims && evals < budget; ++i) {
      for (int dir : {+1, -1}) {
        if (evals >= budget) break;
        AngleConfig cand = cur.best;
        cand.gaps[i] = std::max(1e-7, cand.gaps[i] * std::exp(dir * step));
        cand.gaps = normalized(cand.gaps);
        Scene s;
        try {
          s = angles_to_scene(cand);
        } catch (const PrecisionLoss&) {
          continue;
        }
        UnionResult r = union_boundary(s);
        ++evals;
        if (!r.simple() || r.polygon->side_count() != cur.best_m)
          continue;  // combinatorial type must be preserved
        Rat sc = canonical_score(*r.polygon);
        if (sc > cur_score) {
          cur.best = cand;
          cur.scene = s;
          cur.certificate = *r.polygon;
          cur_score = sc;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  cur.trace.evaluations += evals;
  return cur;
}

}  // namespace politrigon

#include "politrigon/ds.hpp"

#include <algorithm>

namespace politrigon {

bool is_ds2(const SymbolSeq& s) {
  int m = static_cast<int>(s.size());
  for (int i = 0; i + 1 < m; ++i)
    if (s[i] == s[i + 1]) return false;
  // No a..b..a..b: for every value a, between two occurrences of a all
  // symbols seen after the first block must be fresh. Quadratic scan over
  // ordered pairs is plenty at these lengths.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (s[j] != s[i]) continue;
      // s[i] == s[j] == a; an intervening b recurring after j forbids.
      for (int k = i + 1; k < j; ++k)
        for (int l = j + 1; l < m; ++l)
          if (s[k] == s[l] && s[k] != s[i]) return false;
    }
  return true;
}

int ds2_max_len(int n) { return 2 * n - 1; }

int upper_bound(int n) { return n * (12 * n - 6) / (n + 1); }

namespace {

// Pair positions of a labeled cycle: each bold entry must belong to exactly
// one adjacent equal-symbol pair. Returns the index of the first entry of
// each pair, or nothing if the bold entries do not tile into pairs.
std::optional<std::vector<int>> bold_pairs(const LabeledCycle& c) {
  int m = c.size();
  if (m == 0) return std::vector<int>{};
  // Anchor the pairing at an italic entry; if all entries are bold, try
  // both phases.
  int start = -1;
  for (int i = 0; i < m; ++i)
    if (!c.entries[i].bold) {
      start = i;
      break;
    }
  for (int phase = 0; phase < (start < 0 ? 2 : 1); ++phase) {
    std::vector<int> pairs;
    bool ok = true;
    int i = start < 0 ? phase : start;
    int seen = 0;
    while (seen < m) {
      const CycleEntry& e = c.entries[i % m];
      if (!e.bold) {
        ++i;
        ++seen;
        continue;
      }
      const CycleEntry& f = c.entries[(i + 1) % m];
      if (!f.bold || f.symbol != e.symbol) {
        ok = false;
        break;
      }
      pairs.push_back(i % m);
      i += 2;
      seen += 2;
    }
    if (ok && seen == m) {
      std::sort(pairs.begin(), pairs.end());
      return pairs;
    }
    if (start >= 0) break;
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> rule_s_violations(const LabeledCycle& c) {
  std::vector<int> out;
  int m = c.size();
  auto pairs = bold_pairs(c);
  if (!pairs) return out;
  for (int p : *pairs) {
    int left = c.entries[(p + m - 1) % m].symbol;
    int right = c.entries[(p + 2) % m].symbol;
    if (left != right) out.push_back(p);
  }
  return out;
}

std::optional<LabeledCycle> cycle_from_polygon(const AnnotatedPolygon& p) {
  int m = p.side_count();
  LabeledCycle c;
  c.entries.resize(m);
  for (int i = 0; i < m; ++i) c.entries[i] = {p.sides[i].owner + 1, false};
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    if (c.entries[i].symbol == c.entries[j].symbol) {
      c.entries[i].bold = true;
      c.entries[j].bold = true;
    }
  }
  // Three sides of one triangle in a row leave no valid pairing.
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m, k = (i + 2) % m;
    if (c.entries[i].symbol == c.entries[j].symbol && c.entries[j].symbol == c.entries[k].symbol)
      return std::nullopt;
  }
  return c;
}

ExtractResult extract_lr_sequences(const AnnotatedPolygon& p, int champion) {
  ExtractResult out;
  int n = p.n;
  int t = champion + 1;
  if (n == 1) return out;  // no arcs to extract
  auto cyc = cycle_from_polygon(p);
  if (!cyc) {
    out.regime_violation = "three consecutive sides of one triangle";
    return out;
  }
  const LabeledCycle& c = *cyc;
  int m = c.size();
  auto pairs = bold_pairs(c);
  if (!pairs) {
    out.regime_violation = "bold entries do not form adjacent pairs";
    return out;
  }
  std::vector<int> counts(n + 1, 0);
  for (int q : *pairs) ++counts[c.entries[q].symbol];
  for (int s = 1; s <= n; ++s)
    if (counts[s] != 3) {
      out.regime_violation = "triangle " + std::to_string(s) + " has " +
                             std::to_string(counts[s]) + " vertex pairs, expected 3";
      return out;
    }

  std::vector<int> champ;
  for (int q : *pairs)
    if (c.entries[q].symbol == t) champ.push_back(q);

  for (int a = 0; a < 3; ++a) {
    int from = champ[a];
    int to = champ[(a + 1) % 3];
    // Arc runs from the champion pair at `from` to the one at `to`,
    // exclusive of both pairs' entries.
    int len = (to - from + m) % m - 2;
    // Each other triangle must present exactly one pair inside the arc.
    std::vector<int> seen(n + 1, 0);
    std::vector<int> pair_pos(n + 1, -1);  // offset of the pair inside the arc
    for (int off = 0; off < len; ++off) {
      const CycleEntry& e = c.entries[(from + 2 + off) % m];
      if (e.bold && pair_pos[e.symbol] < 0) pair_pos[e.symbol] = off;
      if (e.bold) seen[e.symbol] += 1;
    }
    for (int s = 1; s <= n; ++s) {
      if (s == t) {
        if (seen[s] != 0) {
          out.regime_violation = "champion pair inside an arc";
          return out;
        }
        continue;
      }
      if (seen[s] != 2) {
        out.regime_violation = "triangle " + std::to_string(s) +
                               " does not present one vertex pair in each arc";
        return out;
      }
    }

    SymbolSeq right{t}, left{t};
    for (int off = 0; off < len; ++off) {
      const CycleEntry& e = c.entries[(from + 2 + off) % m];
      if (e.bold) {
        if (off == pair_pos[e.symbol]) right.push_back(e.symbol);
      } else if (e.symbol == t || off > pair_pos[e.symbol]) {
        right.push_back(e.symbol);
      }
    }
    right.push_back(t);
    for (int off = len - 1; off >= 0; --off) {
      const CycleEntry& e = c.entries[(from + 2 + off) % m];
      if (e.bold) {
        if (off == pair_pos[e.symbol]) left.push_back(e.symbol);
      } else if (e.symbol == t || off < pair_pos[e.symbol]) {
        left.push_back(e.symbol);
      }
    }
    left.push_back(t);
    out.seqs.push_back(std::move(right));
    out.seqs.push_back(std::move(left));
  }
  return out;
}

ChampionReport check_inequality(const AnnotatedPolygon& p) {
  ChampionReport r;
  std::vector<int> l = contributions(p);
  int n = p.n;
  r.champion = static_cast<int>(std::max_element(l.begin(), l.end()) - l.begin());
  long sum = 0;
  for (int v : l) sum += v;
  r.lhs = sum + l[r.champion];
  r.rhs = 12L * n - 6;
  r.holds = r.lhs <= r.rhs;
  ExtractResult ex = extract_lr_sequences(p, r.champion);
  r.arc_sequences = std::move(ex.seqs);
  r.regime_violation = std::move(ex.regime_violation);
  return r;
}

}  // namespace politrigon

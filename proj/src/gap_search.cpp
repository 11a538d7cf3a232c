#include "gap_search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>

namespace politrigon::detail {

namespace {

constexpr const char* kTags[] = {"rule_s", "count", "arc_capacity", "arc_exact",
                                 "ds",     "canonical"};
enum Tag { TagRuleS, TagCount, TagArcCap, TagArcExact, TagDs, kTagCount };
// canonical is tracked but is a symmetry cut, not a contradiction
constexpr int TagCanonical = kTagCount;
constexpr int kAllTags = kTagCount + 1;

int imod(int x, int n) { return (x % n + n) % n; }

}  // namespace

int gap_symbol(int n, int a, int k) { return imod(a - 2 - k, n) + 1; }

namespace {

// Shared read-only tables for one model.
struct Tables {
  const GapModel& m;
  int G, n, W;
  unsigned nmasks;
  // bit_sym[res][k]: symbol of bit k in the gap after pair index res (mod n).
  std::vector<std::vector<int>> bit_sym;
  // Right/left italic contributions of a gap at arc offset `off`.
  std::vector<std::vector<int>> rc_add, lc_add;
  // hosts_suffix[g][s]: gaps at index >= g that can hold symbol s.
  std::vector<std::vector<int>> hosts_suffix;

  explicit Tables(const GapModel& model)
      : m(model), G(model.pairs), n(model.n), W(model.n - 2), nmasks(1u << W) {
    bit_sym.assign(n, std::vector<int>(std::max(W, 1)));
    for (int res = 0; res < n; ++res)
      for (int k = 0; k < W; ++k) bit_sym[res][k] = gap_symbol(n, res + 1, k);

    rc_add.assign(n, std::vector<int>(nmasks, 0));
    lc_add.assign(n, std::vector<int>(nmasks, 0));
    for (int off = 0; off < n; ++off)
      for (unsigned mask = 0; mask < nmasks; ++mask) {
        int rc = 0, lc = 0;
        for (int k = 0; k < W; ++k) {
          if (!(mask >> k & 1)) continue;
          int d = imod(off - k - 1, n);
          if (d == 0) {
            ++rc;
            ++lc;
          } else if (off >= d) {
            ++rc;
          } else {
            ++lc;
          }
        }
        rc_add[off][mask] = rc;
        lc_add[off][mask] = lc;
      }

    hosts_suffix.assign(G + 1, std::vector<int>(n + 1, 0));
    for (int g = G - 1; g >= 0; --g) {
      int a = g % n + 1;
      for (int s = 1; s <= n; ++s) {
        bool hosts = s != a && s != a % n + 1;
        hosts_suffix[g][s] = hosts_suffix[g + 1][s] + (hosts ? 1 : 0);
      }
    }
  }

  int sym(int p) const { return imod(p, n) + 1; }

  int last_symbol(int g, unsigned mask) const {
    if (mask == 0) return sym(g);  // the pair's own bold entry
    return bit_sym[g % n][std::bit_width(mask) - 1];
  }
  int first_symbol(int g, unsigned mask) const {
    if (mask == 0) return sym(g + 1);
    return bit_sym[g % n][std::countr_zero(mask)];
  }
};

struct Worker {
  const Tables& t;
  const GapModel& m;
  std::atomic<bool>& found;
  std::atomic<long>& nodes_global;
  long local_nodes = 0;
  bool budget_hit = false;
  long ctr[kAllTags] = {};

  std::vector<unsigned> masks;
  std::vector<int> counts;  // per symbol
  int total = 0;
  std::vector<int> rsum, lsum;  // per arc start

  Worker(const Tables& tables, std::atomic<bool>& f, std::atomic<long>& ng)
      : t(tables), m(tables.m), found(f), nodes_global(ng) {
    masks.assign(t.G, 0);
    counts.assign(t.n + 1, 0);
    rsum.assign(t.G, 0);
    lsum.assign(t.G, 0);
  }

  bool stop() {
    if (found.load(std::memory_order_relaxed)) return true;
    if (++local_nodes % 256 == 0) {
      long g = nodes_global.fetch_add(256, std::memory_order_relaxed) + 256;
      if (g > m.node_budget) {
        budget_hit = true;
        return true;
      }
    }
    return budget_hit;
  }

  // Applies gap g := mask, checking every constraint that becomes decidable.
  // On failure the state is rolled back and false returned.
  bool try_gap(int g, unsigned mask) {
    if (m.pinned_gap == g && mask != m.pinned_mask) return false;
    if (m.canonical_rotation && g > 0 && mask < masks[0]) {
      ++ctr[TagCanonical];
      return false;
    }
    if (m.rule_s && g >= 1 &&
        t.last_symbol(g - 1, masks[g - 1]) != t.first_symbol(g, mask)) {
      ++ctr[TagRuleS];
      return false;
    }

    int applied_bits = 0;
    bool ok = true;
    for (int k = 0; k < t.W && ok; ++k) {
      if (!(mask >> k & 1)) continue;
      int s = t.bit_sym[g % t.n][k];
      ++counts[s];
      ++total;
      ++applied_bits;
      int cap = m.per_symbol_exact >= 0 ? m.per_symbol_exact : m.per_symbol_max;
      if (cap >= 0 && counts[s] > cap) ok = false;
      if (m.total_exact >= 0 && total > m.total_exact) ok = false;
    }
    if (ok && m.per_symbol_exact >= 0)
      for (int s = 1; s <= t.n && ok; ++s)
        if (counts[s] + t.hosts_suffix[g + 1][s] < m.per_symbol_exact) ok = false;
    if (ok && m.total_exact >= 0 && total + (t.G - 1 - g) * t.W < m.total_exact) ok = false;
    if (!ok) {
      ++ctr[TagCount];
      rollback_counts(g, mask, applied_bits);
      return false;
    }

    int applied_arcs = 0;
    for (int off = 0; off < t.n && ok; ++off) {
      int p = imod(g - off, t.G);
      rsum[p] += t.rc_add[off][mask];
      lsum[p] += t.lc_add[off][mask];
      ++applied_arcs;
      if (rsum[p] > t.W || lsum[p] > t.W) ok = false;
    }
    if (!ok) {
      ++ctr[TagArcCap];
      rollback_arcs(g, mask, applied_arcs);
      rollback_counts(g, mask, applied_bits);
      return false;
    }

    masks[g] = mask;
    int p = g - t.n + 1;
    if (p >= 0 && !arc_ok(p)) {
      masks[g] = 0;
      rollback_arcs(g, mask, applied_arcs);
      rollback_counts(g, mask, applied_bits);
      return false;
    }
    return true;
  }

  void undo_gap(int g, unsigned mask) {
    masks[g] = 0;
    rollback_arcs(g, mask, t.n);
    rollback_counts(g, mask, std::popcount(mask));
  }

  void rollback_counts(int g, unsigned mask, int upto) {
    for (int k = 0; k < t.W && upto > 0; ++k) {
      if (!(mask >> k & 1)) continue;
      --counts[t.bit_sym[g % t.n][k]];
      --total;
      --upto;
    }
  }

  void rollback_arcs(int g, unsigned mask, int upto) {
    for (int off = 0; off < upto; ++off) {
      int p = imod(g - off, t.G);
      rsum[p] -= t.rc_add[off][mask];
      lsum[p] -= t.lc_add[off][mask];
    }
  }

  // Full check of the arc starting at pair p, whose gaps are all assigned.
  bool arc_ok(int p) {
    if (m.arcs_exact && (rsum[p] != t.W || lsum[p] != t.W)) {
      ++ctr[TagArcExact];
      return false;
    }
    int champ = t.sym(p);
    SymbolSeq right{champ}, left{champ};
    for (int off = 0; off < t.n; ++off) {
      int g = imod(p + off, t.G);
      if (off > 0) right.push_back(t.sym(p + off));
      unsigned mask = masks[g];
      for (int k = 0; k < t.W; ++k) {
        if (!(mask >> k & 1)) continue;
        int d = imod(off - k - 1, t.n);
        if (d == 0 || off >= d) right.push_back(t.bit_sym[g % t.n][k]);
      }
    }
    right.push_back(champ);
    for (int off = t.n - 1; off >= 0; --off) {
      int g = imod(p + off, t.G);
      unsigned mask = masks[g];
      for (int k = t.W - 1; k >= 0; --k) {
        if (!(mask >> k & 1)) continue;
        int d = imod(off - k - 1, t.n);
        if (d == 0 || off < d) left.push_back(t.bit_sym[g % t.n][k]);
      }
      if (off > 0) left.push_back(t.sym(p + off));
    }
    left.push_back(champ);
    if (!is_ds2(right) || !is_ds2(left)) {
      ++ctr[TagDs];
      return false;
    }
    return true;
  }

  bool finalize() {
    if (m.rule_s && t.last_symbol(t.G - 1, masks[t.G - 1]) != t.first_symbol(0, masks[0])) {
      ++ctr[TagRuleS];
      return false;
    }
    if (m.per_symbol_exact >= 0)
      for (int s = 1; s <= t.n; ++s)
        if (counts[s] != m.per_symbol_exact) {
          ++ctr[TagCount];
          return false;
        }
    if (m.total_exact >= 0 && total != m.total_exact) {
      ++ctr[TagCount];
      return false;
    }
    for (int p = t.G - t.n + 1; p < t.G; ++p)
      if (p >= 0 && !arc_ok(p)) return false;
    return true;
  }

  bool dfs(int g) {
    if (g == t.G) return finalize();
    for (unsigned mask = 0; mask < t.nmasks; ++mask) {
      if (stop()) return false;
      if (!try_gap(g, mask)) continue;
      if (dfs(g + 1)) return true;
      undo_gap(g, mask);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<unsigned>> gap_search(const GapModel& m, SearchStats& stats) {
  Tables t(m);
  std::atomic<bool> found{false};
  std::atomic<long> nodes_global{0};
  std::optional<std::vector<unsigned>> witness;
  bool budget_hit = false;
  long ctr[kAllTags] = {};

  int nthreads = m.threads > 0 ? m.threads : omp_get_max_threads();
  long tasks = static_cast<long>(t.nmasks) * (t.G >= 2 ? t.nmasks : 1);

#pragma omp parallel num_threads(nthreads)
  {
    Worker w(t, found, nodes_global);
#pragma omp for schedule(dynamic)
    for (long task = 0; task < tasks; ++task) {
      if (found.load(std::memory_order_relaxed) || w.budget_hit) continue;
      unsigned m0 = static_cast<unsigned>(task / (t.G >= 2 ? t.nmasks : 1));
      unsigned m1 = static_cast<unsigned>(task % (t.G >= 2 ? t.nmasks : 1));
      if (!w.try_gap(0, m0)) continue;
      bool hit = false;
      if (t.G >= 2) {
        if (w.try_gap(1, m1)) {
          hit = w.dfs(2);
          if (!hit) w.undo_gap(1, m1);
        }
      } else {
        hit = w.dfs(1);
      }
      if (hit) {
        bool expected = false;
        if (found.compare_exchange_strong(expected, true)) {
#pragma omp critical
          witness = w.masks;
        }
      } else {
        w.undo_gap(0, m0);
      }
    }
#pragma omp critical
    {
      for (int i = 0; i < kAllTags; ++i) ctr[i] += w.ctr[i];
      nodes_global.fetch_add(w.local_nodes % 256);
      if (w.budget_hit) budget_hit = true;
    }
  }

  stats.nodes = nodes_global.load();
  stats.budget_hit = budget_hit && !witness;
  for (int i = 0; i < kAllTags; ++i)
    if (ctr[i] > 0) stats.contradictions[kTags[i]] += ctr[i];
  return witness;
}

LabeledCycle cycle_from_masks(int n, const std::vector<unsigned>& masks) {
  LabeledCycle c;
  int G = static_cast<int>(masks.size());
  for (int p = 0; p < G; ++p) {
    int a = p % n + 1;
    c.entries.push_back({a, true});
    c.entries.push_back({a, true});
    for (int k = 0; k < n - 2; ++k)
      if (masks[p] >> k & 1) c.entries.push_back({gap_symbol(n, a, k), false});
  }
  return c;
}

std::optional<std::vector<unsigned>> masks_from_cycle(int n, const LabeledCycle& c) {
  int m = c.size();
  if (m == 0) return std::nullopt;
  // Locate the bold pairs: anchor at an italic entry.
  int start = -1;
  for (int i = 0; i < m; ++i)
    if (!c.entries[i].bold) {
      start = i;
      break;
    }
  if (start < 0) start = 0;  // all bold: the backbone phase must begin at 0
  std::vector<int> pair_at;
  {
    int i = start, seen = 0;
    while (seen < m) {
      const CycleEntry& e = c.entries[i % m];
      if (!e.bold) {
        ++i;
        ++seen;
        continue;
      }
      if (!c.entries[(i + 1) % m].bold || c.entries[(i + 1) % m].symbol != e.symbol)
        return std::nullopt;
      pair_at.push_back(i % m);
      i += 2;
      seen += 2;
    }
  }
  std::sort(pair_at.begin(), pair_at.end());
  int G = static_cast<int>(pair_at.size());
  if (G == 0 || G % n != 0) return std::nullopt;
  // Rotate so the backbone starts at a pair of symbol 1 preceded by one of
  // symbol n.
  int r = -1;
  for (int i = 0; i < G; ++i) {
    int prev = c.entries[pair_at[(i + G - 1) % G]].symbol;
    if (c.entries[pair_at[i]].symbol == 1 && prev == n) {
      r = i;
      break;
    }
  }
  if (r < 0) return std::nullopt;
  std::vector<unsigned> masks(G, 0);
  for (int p = 0; p < G; ++p) {
    int i = pair_at[(r + p) % G];
    int j = pair_at[(r + p + 1) % G];
    int a = p % n + 1;
    if (c.entries[i].symbol != a) return std::nullopt;
    int pos = (i + 2) % m;
    int prev_k = -1;
    while (pos != j) {
      const CycleEntry& e = c.entries[pos];
      if (e.bold) return std::nullopt;
      int k = -1;
      for (int q = 0; q < n - 2; ++q)
        if (gap_symbol(n, a, q) == e.symbol) k = q;
      if (k < 0 || k <= prev_k) return std::nullopt;
      masks[p] |= 1u << k;
      prev_k = k;
      pos = (pos + 1) % m;
    }
  }
  return masks;
}

std::optional<std::string> check_masks(const GapModel& m, const std::vector<unsigned>& masks) {
  Tables t(m);
  if (static_cast<int>(masks.size()) != t.G) return "length";
  std::atomic<bool> found{false};
  std::atomic<long> nodes{0};
  Worker w(t, found, nodes);
  for (int g = 0; g < t.G; ++g)
    if (!w.try_gap(g, masks[g])) {
      for (int i = 0; i < kAllTags; ++i)
        if (w.ctr[i] > 0) return kTags[i];
      return "pinned";
    }
  if (!w.finalize()) {
    for (int i = 0; i < kAllTags; ++i)
      if (w.ctr[i] > 0) return kTags[i];
    return "finalize";
  }
  return std::nullopt;
}

}  // namespace politrigon::detail

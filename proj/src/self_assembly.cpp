#include <bit>

#include "gap_search.hpp"

namespace politrigon {

namespace {

std::string token(const std::vector<int>& symbols, int n) {
  std::string out;
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (i && n > 9) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out;
}

}  // namespace

AssemblyOutcome self_assemble(const SymbolSeq& seed, int n) {
  AssemblyOutcome out;

  // Place the seed: it must read as a gap content, a subset of the n-2
  // symbols after some pair aa, in descending cyclic order from a-1.
  int a = 0;
  unsigned mask = 0;
  for (int cand = 1; cand <= n && a == 0; ++cand) {
    unsigned m = 0;
    int prev_k = -1;
    bool ok = !seed.empty();
    for (int s : seed) {
      int k = -1;
      for (int q = 0; q < n - 2; ++q)
        if (detail::gap_symbol(n, cand, q) == s) k = q;
      if (k < 0 || k <= prev_k) {
        ok = false;
        break;
      }
      m |= 1u << k;
      prev_k = k;
    }
    if (ok) {
      a = cand;
      mask = m;
    }
  }
  if (a == 0) {
    out.closed = false;
    out.contradiction_step = 0;
    return out;
  }

  // Forced flanks. The pair before the seed gap is aa and the one after is
  // bb with b = a+1. Rule S at aa demands its left neighbour equal the first
  // seed symbol; when that symbol cannot sit as an italic in the preceding
  // gap, the pair (a-1)(a-1) is forced flush against aa. Mirrored on the
  // right.
  int b = a % n + 1;
  std::vector<std::vector<int>> ext;
  int first = seed.front(), last = seed.back();
  int left_pair = (a - 2 + n) % n + 1;   // symbol of the pair before aa
  int right_pair = b % n + 1;            // symbol of the pair after bb
  bool first_in_prev_gap = false, last_in_next_gap = false;
  for (int q = 0; q < n - 2; ++q) {
    if (detail::gap_symbol(n, left_pair, q) == first) first_in_prev_gap = true;
    if (detail::gap_symbol(n, b, q) == last) last_in_next_gap = true;
  }
  if (!first_in_prev_gap && first == left_pair) ext.push_back({left_pair, left_pair});
  ext.push_back({a, a});
  ext.push_back(seed);
  ext.push_back({b, b});
  if (!last_in_next_gap && last == right_pair) ext.push_back({right_pair, right_pair});
  std::string text;
  for (const auto& tok : ext) {
    if (!text.empty()) text += ' ';
    text += token(tok, n);
  }
  out.first_extension = text;

  // Closure: grow the backbone in whole alphabet blocks until the rules
  // admit a cyclic completion containing the pinned seed gap.
  for (int blocks = 1; blocks <= 12; ++blocks) {
    detail::GapModel m;
    m.n = n;
    m.pairs = blocks * n;
    m.rule_s = true;
    m.arcs_exact = true;
    m.pinned_gap = a - 1;  // the gap after the pair of symbol a
    m.pinned_mask = mask;
    m.threads = 1;  // deterministic outcome
    m.node_budget = 2000000000L;
    detail::SearchStats stats;
    auto witness = detail::gap_search(m, stats);
    if (witness) {
      int len = 2 * m.pairs;
      for (unsigned g : *witness) len += std::popcount(g);
      out.closed = true;
      out.cycle_length = len;
      return out;
    }
    if (stats.budget_hit) break;
  }
  out.closed = false;
  out.contradiction_step = static_cast<int>(seed.size());
  return out;
}

}  // namespace politrigon

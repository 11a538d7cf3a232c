#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "politrigon/ds.hpp"

namespace politrigon::detail {

// Backbone model of a boundary word: `pairs` bold pairs whose symbols run
// 1..n cyclically in order, one gap after each pair. The gap after a pair of
// symbol a holds a subset of the n-2 symbols cyclically strictly between a
// and a+1, listed in descending cyclic order from a-1; a gap is encoded as a
// bitmask over that ordered list.
struct GapModel {
  int n = 0;
  int pairs = 0;  // multiple of n
  bool rule_s = true;
  bool arcs_exact = true;  // arc extractions exactly 2n-1 long (else <=)
  // Italic count constraints; -1 disables the respective one.
  int per_symbol_exact = -1;
  int per_symbol_max = -1;
  int total_exact = -1;
  int pinned_gap = -1;  // force this gap's mask
  unsigned pinned_mask = 0;
  bool canonical_rotation = false;  // prune mask vectors below their rotations
  long node_budget = 1000000000L;
  int threads = 0;
};

struct SearchStats {
  long nodes = 0;
  bool budget_hit = false;
  std::map<std::string, long> contradictions;
};

// Symbol at position k (0-based) of the gap after a pair of symbol a.
int gap_symbol(int n, int a, int k);

// First mask vector satisfying the model, or nothing if the space is empty.
std::optional<std::vector<unsigned>> gap_search(const GapModel& m, SearchStats& stats);

LabeledCycle cycle_from_masks(int n, const std::vector<unsigned>& masks);

// Inverse of cycle_from_masks; fails if the cycle does not follow the
// backbone model.
std::optional<std::vector<unsigned>> masks_from_cycle(int n, const LabeledCycle& c);

// Re-checks a complete mask vector against the model; returns the first
// violated constraint's tag, or nothing when valid.
std::optional<std::string> check_masks(const GapModel& m, const std::vector<unsigned>& masks);

}  // namespace politrigon::detail

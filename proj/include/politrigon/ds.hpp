#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "politrigon/union_boundary.hpp"

namespace politrigon {

// Sequence over the alphabet {1..n} of triangle numbers (1-based, as in
// every report).
using SymbolSeq = std::vector<int>;

// A (2,n)-Davenport-Schinzel sequence: no two adjacent equal symbols and no
// subsequence a..b..a..b with a != b.
bool is_ds2(const SymbolSeq& s);

// Maximal length of a (2,n)-DS sequence, 2n - 1.
int ds2_max_len(int n);

// floor(n (12n - 6) / (n + 1)): the side-count bound implied by the champion
// inequality. For n >= 9 this equals 12n - 18 plus 1 exactly when
// 9 <= n <= 17.
int upper_bound(int n);

// Cyclic boundary word: one entry per polygon side, in boundary order. A
// bold entry is half of an adjacent equal pair meeting at a vertex of its
// triangle; every other entry is italic.
struct CycleEntry {
  int symbol = 0;  // 1-based triangle number
  bool bold = false;

  bool operator==(const CycleEntry& o) const = default;
};

struct LabeledCycle {
  std::vector<CycleEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// Positions (index of the first entry of the pair) of bold pairs whose two
// cyclic neighbours carry different symbols.
std::vector<int> rule_s_violations(const LabeledCycle& c);

// Boundary word of a polygon: side owners in walk order, adjacent
// equal-owner runs of length two marked bold. A run of three or more sides
// of one owner has no reading in the pair model and is rejected.
std::optional<LabeledCycle> cycle_from_polygon(const AnnotatedPolygon& p);

struct ExtractResult {
  // Right and left sequence of every boundary arc between consecutive
  // champion vertices, in arc order (right first, then left, per arc).
  std::vector<SymbolSeq> seqs;
  std::optional<std::string> regime_violation;
};

// Per-arc edge sequences for the given champion (0-based index). Walking an
// arc forward lists right edges, walking it backward lists left edges; the
// champion's own entries appear in both.
ExtractResult extract_lr_sequences(const AnnotatedPolygon& p, int champion);

struct ChampionReport {
  int champion = 0;  // 0-based
  long lhs = 0;      // 2 l_champion + sum of the other l_i
  long rhs = 0;      // 12n - 6
  bool holds = false;
  std::vector<SymbolSeq> arc_sequences;
  std::optional<std::string> regime_violation;
};

// Champion inequality 2 l_c + sum_{i != c} l_i <= 12n - 6, champion = a
// triangle of maximal contribution. The verdict needs only the
// contributions; arc sequences are attached when the scene is in the
// cyclic-vertex regime.
ChampionReport check_inequality(const AnnotatedPolygon& p);

// Outcome of deterministic two-sided extension of a descending seed run.
struct AssemblyOutcome {
  bool closed = false;
  int cycle_length = 0;       // set when closed
  int contradiction_step = 0;  // set when not closed
  std::string first_extension;  // seed with its forced flanking pairs
};

AssemblyOutcome self_assemble(const SymbolSeq& seed, int n);

struct RefuteOptions {
  long node_budget = 1000000000L;
  int threads = 0;  // 0 = library default
};

enum class RefuteStatus { Refuted, Witness, BudgetExceeded };

struct RefuteResult {
  RefuteStatus status = RefuteStatus::Refuted;
  std::optional<LabeledCycle> witness;
  long nodes = 0;
  std::map<std::string, long> contradictions;  // pruning reason -> count
};

// Exhaustive search for a boundary word of n triangles with `target` sides.
// At target = upper_bound(n) the champion inequality is tight, which forces
// Rule S everywhere, every arc extraction maximal, and equal contributions;
// an empty search refutes the target. Below the bound the forced constraints
// relax to inequalities and a witness is expected.
//
// For n = 5 and n = 8 the tight search does return a witness: a word whose
// gap masks repeat with period 3. Both witnesses are geometrically
// realizable (see pinwheel in constructions), so the upper bound is
// attained exactly for these n.
RefuteResult refute_target(int n, int target, const RefuteOptions& opt = {});

// Machine-readable audit record of a refutation run.
std::string proof_log_json(int n, int target, const RefuteResult& r);

}  // namespace politrigon

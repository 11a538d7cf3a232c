#include <json.hpp>
#include <stdexcept>

#include "gap_search.hpp"

namespace politrigon {

RefuteResult refute_target(int n, int target, const RefuteOptions& opt) {
  if (n < 3) throw std::invalid_argument("refute_target needs n >= 3");
  int ub = upper_bound(n);
  if (target > ub) throw std::invalid_argument("target above the proven bound");
  if (target < 6 * n) throw std::invalid_argument("target below the 6n bold entries");

  detail::GapModel m;
  m.n = n;
  m.pairs = 3 * n;
  m.node_budget = opt.node_budget;
  m.threads = opt.threads;
  if (target == ub && target % n == 0) {
    // Tight case: equality in the champion inequality forces equal
    // contributions, Rule S everywhere and maximal arc extractions.
    m.rule_s = true;
    m.arcs_exact = true;
    m.per_symbol_exact = target / n - 6;
    m.canonical_rotation = true;
  } else {
    // Below the bound only the counting consequences remain: total side
    // count, the per-triangle cap from the inequality, and DS-validity of
    // every extraction.
    m.rule_s = false;
    m.arcs_exact = false;
    m.per_symbol_max = (12 * n - 6 - target) - 6;
    m.total_exact = target - 6 * n;
    m.canonical_rotation = true;
  }

  detail::SearchStats stats;
  auto witness = detail::gap_search(m, stats);

  RefuteResult r;
  r.nodes = stats.nodes;
  r.contradictions = stats.contradictions;
  if (witness) {
    r.status = RefuteStatus::Witness;
    r.witness = detail::cycle_from_masks(n, *witness);
  } else if (stats.budget_hit) {
    r.status = RefuteStatus::BudgetExceeded;
  } else {
    r.status = RefuteStatus::Refuted;
  }
  return r;
}

std::string proof_log_json(int n, int target, const RefuteResult& r) {
  nlohmann::json j;
  j["n"] = n;
  j["target"] = target;
  switch (r.status) {
    case RefuteStatus::Refuted: j["status"] = "refuted"; break;
    case RefuteStatus::Witness: j["status"] = "witness"; break;
    case RefuteStatus::BudgetExceeded: j["status"] = "budget_exceeded"; break;
  }
  j["nodes"] = r.nodes;
  j["contradictions"] = nlohmann::json::object();
  for (const auto& [tag, cnt] : r.contradictions) j["contradictions"][tag] = cnt;
  if (r.witness) {
    std::string w;
    for (const CycleEntry& e : r.witness->entries) {
      if (!w.empty()) w += ' ';
      w += e.bold ? std::to_string(e.symbol) : "i" + std::to_string(e.symbol);
    }
    j["witness"] = w;
  }
  return j.dump(2);
}

}  // namespace politrigon

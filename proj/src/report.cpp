#include "politrigon/report.hpp"

#include <sstream>

namespace politrigon {

Report make_report(const Scene& s) {
  Report rep;
  rep.n = s.size();
  UnionResult r = union_boundary(s);
  if (!r.simple()) {
    rep.rejection = r.rejection;
    return rep;
  }
  rep.polygon = r.polygon;
  const AnnotatedPolygon& p = *r.polygon;
  rep.l_vector = contributions(p);
  rep.canonical = canonical_score(p);
  ChampionReport ineq = check_inequality(p);
  rep.inequality = ineq;
  rep.regime_violation = ineq.regime_violation;
  if (!ineq.regime_violation) {
    rep.extraction_ds_valid = true;
    for (int champ = 0; champ < rep.n; ++champ) {
      ExtractResult ex = extract_lr_sequences(p, champ);
      if (ex.regime_violation) {
        rep.regime_violation = ex.regime_violation;
        break;
      }
      for (const SymbolSeq& q : ex.seqs) {
        ++rep.extracted_sequences;
        rep.extraction_max_len =
            std::max(rep.extraction_max_len, static_cast<int>(q.size()));
        if (!is_ds2(q)) rep.extraction_ds_valid = false;
      }
    }
  }
  return rep;
}

std::string Report::key_value() const {
  std::ostringstream out;
  out << "n " << n << "\n";
  if (!simple()) {
    out << "verdict rejected\n";
    if (rejection) {
      out << "reason " << reject_reason_name(rejection->reason) << "\n";
      out << "witness " << rat_to_string(rejection->witness.x) << " "
          << rat_to_string(rejection->witness.y) << "\n";
    }
    return out.str();
  }
  out << "verdict simple\n";
  out << "sides " << polygon->side_count() << "\n";
  out << "l_vector";
  for (int l : l_vector) out << ' ' << l;
  out << "\n";
  if (inequality) {
    out << "champion " << inequality->champion + 1 << "\n";
    out << "inequality " << inequality->lhs << " <= " << inequality->rhs
        << (inequality->holds ? " holds" : " violated") << "\n";
  }
  if (regime_violation) {
    out << "extraction skipped " << *regime_violation << "\n";
  } else {
    out << "extraction sequences " << extracted_sequences << " max_len "
        << extraction_max_len << " ds_valid "
        << (extraction_ds_valid ? "yes" : "no") << "\n";
  }
  if (canonical) out << "canonical_score " << rat_to_string(*canonical) << "\n";
  return out.str();
}

std::string Report::human() const {
  std::ostringstream out;
  if (!simple()) {
    out << "Rejected";
    if (rejection)
      out << " (" << reject_reason_name(rejection->reason) << " at "
          << rat_to_string(rejection->witness.x) << ", "
          << rat_to_string(rejection->witness.y) << ")";
    out << ": the union of the " << n
        << " triangles is not a simple polygon.\n";
    return out.str();
  }
  out << "Simple polygon, M = " << polygon->side_count() << " sides from " << n
      << " triangle" << (n == 1 ? "" : "s") << ".\n";
  out << "Per-triangle side counts:";
  for (int l : l_vector) out << ' ' << l;
  out << "\n";
  if (inequality)
    out << "Champion inequality: 2 l_" << inequality->champion + 1
        << " + rest = " << inequality->lhs << " <= " << inequality->rhs << " ("
        << (inequality->holds ? "holds" : "VIOLATED") << ")\n";
  if (regime_violation)
    out << "Arc extraction not applicable: " << *regime_violation << "\n";
  else
    out << "Arc extraction: " << extracted_sequences
        << " sequences, all Davenport-Schinzel valid: "
        << (extraction_ds_valid ? "yes" : "NO")
        << ", longest = " << extraction_max_len << "\n";
  if (canonical)
    out << "Canonical score (area / sum of squared sides): "
        << to_double(*canonical) << "\n";
  return out.str();
}

}  // namespace politrigon

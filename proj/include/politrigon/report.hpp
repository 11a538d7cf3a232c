#pragma once

#include <optional>
#include <string>

#include "politrigon/config_search.hpp"
#include "politrigon/ds.hpp"
#include "politrigon/union_boundary.hpp"

namespace politrigon {

// Everything `verify` prints about a scene. The structured key-value form
// is the golden-file surface for harnesses; the human form adds layout.
struct Report {
  int n = 0;
  std::optional<AnnotatedPolygon> polygon;
  std::optional<Rejection> rejection;
  std::vector<int> l_vector;
  std::optional<ChampionReport> inequality;
  int extracted_sequences = 0;
  int extraction_max_len = 0;
  bool extraction_ds_valid = false;
  std::optional<std::string> regime_violation;
  std::optional<Rat> canonical;

  bool simple() const { return polygon.has_value(); }
  std::string key_value() const;
  std::string human() const;
};

Report make_report(const Scene& s);

}  // namespace politrigon

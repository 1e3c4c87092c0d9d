#pragma once

#include <json.hpp>

#include "pennantwebs/jellyfish.hpp"
#include "pennantwebs/tableaux.hpp"
#include "pennantwebs/webbasis.hpp"

namespace pennantwebs {

// JSON wire forms. All arrays follow the canonical orders of the producing
// module, so serialized output is byte-stable.

template <class Coeff>
nlohmann::json polynomial_to_json(const PolynomialT<Coeff>& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [rank, exp] : m.factors())
      vars.push_back({var_row(rank), var_col(rank), exp});
    terms.push_back({{"coeff", c.get_str()}, {"vars", vars}});
  }
  return terms;
}

inline nlohmann::json jellyfish_to_json(const JellyfishTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::vector<nlohmann::json>> grid(
      t.row_count(), std::vector<nlohmann::json>(t.column_count(), nullptr));
  for (const Cell& cell : t.cells()) grid[cell.row - 1][cell.col] = cell.value;
  for (const auto& row : grid) rows.push_back(row);

  int n = 0;
  for (const auto& b : t.blocks()) n += static_cast<int>(b.size());
  return {{"pi", SetPartition(n, t.blocks()).to_string()}, {"rows", rows}};
}

inline nlohmann::json expansion_to_json(const SetPartition& target, const WebBasis& basis,
                                        const BasisExpansion& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    if (e.coeffs[i] == 0) continue;
    coeffs.push_back({{"pi", basis[i].pi().to_string()}, {"c", e.coeffs[i].get_str()}});
  }
  return {{"target", target.to_string()}, {"coeffs", coeffs}};
}

inline nlohmann::json orbits_to_json(int q, int m,
                                     const std::vector<std::vector<IncreasingTableau>>& orbits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& orbit : orbits) {
    nlohmann::json tabs = nlohmann::json::array();
    for (const auto& t : orbit) tabs.push_back(t.to_string());
    arr.push_back({{"size", orbit.size()}, {"tableaux", tabs}});
  }
  return {{"q", q}, {"m", m}, {"orbits", arr}};
}

}  // namespace pennantwebs

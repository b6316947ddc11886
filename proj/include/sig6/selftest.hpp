#pragma once

#include <string>
#include <vector>

namespace sig6::selftest {

/// A measured quantity and the bound it must respect.
struct Check {
  std::string name;
  double value;
  double threshold;

  [[nodiscard]] bool pass() const { return value <= threshold; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  [[nodiscard]] bool pass() const;
  /// The check with the largest value / threshold ratio.
  [[nodiscard]] const Check& worst() const;
};

CriterionResult k_route_agreement();        // 1
CriterionResult sextic_identity();          // 2
CriterionResult bbg_parametrizations();     // 3
CriterionResult periodicity();              // 4
CriterionResult pythagorean_and_anchors();  // 5
CriterionResult inversion_round_trip();     // 6
CriterionResult closed_form_vs_series();    // 7
CriterionResult weierstrass_suite();        // 8
CriterionResult modulus_map_suite();        // 9

/// Criteria 1 through 9, in order.
std::vector<CriterionResult> run_all();

}  // namespace sig6::selftest

/**
 * @file norm_value.hpp
 * @brief A norm estimate together with its truncation ladder and classification.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klab/quadrature.hpp"

namespace klab {

using quadrature::Classification;

struct NormValue {
  std::string kind;
  double value = 0.0;
  double p = 2.0;
  /// (epsilon_k, norm truncated at epsilon_k), epsilon decreasing.
  std::vector<std::pair<double, double>> truncations;
  Classification classification = Classification::Inconclusive;
  int quadrature_order = 0;
  /// Last relative increment of the value ladder.
  double residual = 0.0;
  /// Share of the p-th power carried by the last three ladder levels.
  double tail_share = 0.0;
  std::string note;

  bool finite() const { return classification == Classification::Finite; }
  std::string to_json() const;
};

/// Builds a NormValue from a ladder of p-th powers indexed by truncation level.
NormValue norm_from_power_ladder(std::string kind, const std::vector<int>& levels,
                                 const std::vector<double>& power_ladder, double p, int quadrature_order,
                                 std::optional<bool> oracle_finite = std::nullopt);

/// Sum of two norms; ladders are combined entrywise when they have equal length.
NormValue sum_of_norms(std::string kind, const NormValue& a, const NormValue& b);

}  // namespace klab

/**
 * @file norm_value.cpp
 */
#include "klab/norm_value.hpp"

#include <cmath>

#include "json.hpp"

namespace klab {

std::string NormValue::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["value"] = std::isfinite(value) ? nlohmann::ordered_json(value) : nlohmann::ordered_json("inf");
  j["p"] = p;
  j["classification"] = quadrature::to_string(classification);
  j["quadrature_order"] = quadrature_order;
  j["residual"] = residual;
  j["tail_share"] = tail_share;
  auto ladder = nlohmann::ordered_json::array();
  for (const auto& [eps, v] : truncations) ladder.push_back({{"epsilon", eps}, {"value", v}});
  j["truncations"] = std::move(ladder);
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

NormValue norm_from_power_ladder(std::string kind, const std::vector<int>& levels,
                                 const std::vector<double>& power_ladder, double p, int quadrature_order,
                                 std::optional<bool> oracle_finite) {
  NormValue n;
  n.kind = std::move(kind);
  n.p = p;
  n.quadrature_order = quadrature_order;
  for (std::size_t i = 0; i < levels.size(); ++i)
    n.truncations.emplace_back(std::ldexp(1.0, -levels[i]), std::pow(power_ladder[i], 1.0 / p));
  n.value = n.truncations.empty() ? 0.0 : n.truncations.back().second;
  n.classification = quadrature::classify_ladder(power_ladder, p, oracle_finite);
  const std::size_t m = power_ladder.size();
  if (m >= 2 && n.value > 0.0) n.residual = std::abs(n.value - n.truncations[m - 2].second) / n.value;
  if (m >= 4 && power_ladder.back() > 0.0)
    n.tail_share = (power_ladder.back() - power_ladder[m - 4]) / power_ladder.back();
  return n;
}

NormValue sum_of_norms(std::string kind, const NormValue& a, const NormValue& b) {
  NormValue n;
  n.kind = std::move(kind);
  n.p = a.p;
  n.value = a.value + b.value;
  n.quadrature_order = std::max(a.quadrature_order, b.quadrature_order);
  n.residual = std::max(a.residual, b.residual);
  n.tail_share = std::max(a.tail_share, b.tail_share);
  if (a.truncations.size() == b.truncations.size()) {
    for (std::size_t i = 0; i < a.truncations.size(); ++i)
      n.truncations.emplace_back(a.truncations[i].first, a.truncations[i].second + b.truncations[i].second);
  } else {
    n.truncations = a.truncations.size() >= b.truncations.size() ? a.truncations : b.truncations;
  }
  if (a.classification == Classification::Divergent || b.classification == Classification::Divergent)
    n.classification = Classification::Divergent;
  else if (a.finite() && b.finite())
    n.classification = Classification::Finite;
  else
    n.classification = Classification::Inconclusive;
  n.note = a.note.empty() ? b.note : (b.note.empty() ? a.note : a.note + "; " + b.note);
  return n;
}

}  // namespace klab

/**
 * @file embeddings.hpp
 * @brief Exact decision procedures for the parameter conditions relating
 *        Kondratiev and refined-localization Triebel-Lizorkin spaces.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klab/params.hpp"

namespace klab::embeddings {

enum class Outcome { Holds, Fails, UndeterminedByPaper };

std::string to_string(Outcome o);

/// One evaluated inequality lhs (<, <=, =) rhs.
struct Condition {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "<", "<=", "="
  bool satisfied = false;
};

struct Verdict {
  Outcome outcome = Outcome::UndeterminedByPaper;
  std::string trigger;
  std::vector<Condition> conditions;

  std::string to_json() const;
};

struct HolderRoute {
  bool applies = false;
  bool improved_applies = false;
  /// 1/eta = m/d + 1/tau - 1/p
  double eta = 0.0;
  /// 1/r = 1/tau - 1/p
  double r = 0.0;
};

/// tau = (m/d + 1/2)^-1.
double adaptivity_scale(int d, double m);

/// K^m_{a,p}(D) into F^{m,rloc}_{tau,2}(D) with singular set of dimension delta.
Verdict decide_embedding(const SpaceParams& params);

/// Sufficient conditions through the Hoelder inequality, model domain R^d \ R^l.
std::pair<Verdict, HolderRoute> decide_embedding_holder_route(const SpaceParams& params, double q1 = 2.0,
                                                              double q2 = 2.0);

/// F^{m,rloc}_{tau,2}(D) into K^m_{a,p}(D) (compactly supported functions).
Verdict decide_reverse_embedding(const SpaceParams& params);

/// Supremum of tau for the regularity of the shifted solution; a_bar is the
/// domain-dependent bound on |a|, supplied by the caller.
double pde_regularity_tau(int m, double a, int d, double delta, std::optional<double> a_bar = std::nullopt);

struct Threshold {
  double value = 0.0;
  /// tau >= 1: sigma_{tau,2} = 0 and the bound carries no information.
  bool vacuous = false;
};

/// a > l (1/tau - 1/p) + d (1/p - 1).
Threshold technical_threshold_a(int ell, int d, double tau, double p);

}  // namespace klab::embeddings

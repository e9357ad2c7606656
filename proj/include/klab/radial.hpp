/**
 * @file radial.hpp
 * @brief Shell-by-shell radial reduction of weighted norms of the test family
 *        around an isolated singular point, and growth-law fits of the ladders.
 */
#pragma once

#include <vector>

#include "klab/quadrature.hpp"
#include "klab/testfns.hpp"

namespace klab::radial {

inline constexpr int kDefaultShells = 1024;

/// sum_{m_min <= |alpha| <= m_max} |rho^{|alpha| - a} d^alpha u|^p.
struct Integrand {
  int m_min = 0;
  int m_max = 0;
  double a = 0.0;
  double p = 2.0;
};

/// Cumulative p-th powers over the shells 2^-k <= |x| <= 2^-k+1.
struct Ladder {
  std::vector<int> k;
  /// log(1/eps_k) = k ln 2.
  std::vector<double> t;
  std::vector<double> power;
};

/// Needs a model domain with l = 0 and the family centered at the origin (d = 1..3).
Ladder shell_ladder(const testfns::TestFunction& u, const Integrand& f, int k_max = kDefaultShells);

/// int_{2^-k}^{1} s^e (1 + |log s|)^g ds, cumulative in k.
Ladder radial_integral_ladder(double e, double g, int k_max = kDefaultShells);

/// V(t) ~ A + B (1 + t)^gamma through the ladder points at k_max/4, k_max/2, k_max.
struct GrowthFit {
  double gamma = 0.0;
  double A = 0.0;
  double B = 0.0;
  /// Max relative deviation of the fit over the upper half of the ladder.
  double residual = 0.0;
};

GrowthFit fit_growth(const Ladder& ladder);

/// Last three relative increments of power^{1/p} below the Cauchy tolerance.
bool is_cauchy(const Ladder& ladder, double p);

}  // namespace klab::radial

/**
 * @file params.hpp
 * @brief The parameter tuple indexing all spaces and conditions.
 */
#pragma once

#include <string>

namespace klab {

struct SpaceParams {
  int m = 1;           // smoothness
  double a = 0.0;      // Kondratiev weight
  double p = 2.0;      // Kondratiev integrability
  double tau = 2.0;    // target integrability
  double q = 2.0;      // fine index (fixed to 2 for norm evaluation)
  int d = 2;           // dimension
  int ell = 0;         // dimension of the singular plane (model domains)
  double delta = 0.0;  // dimension of the singular set (polytopes)

  std::string to_json() const;
};

/// sigma_{tau,q} = d (1 / min(1, tau, q) - 1).
double sigma(double tau, double q, int d);

}  // namespace klab

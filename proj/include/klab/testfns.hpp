/**
 * @file testfns.hpp
 * @brief The closed-form family u = rho^beta (1 + |log rho|)^lambda zeta(|x - c| / R)
 *        and exact membership rules for it.
 */
#pragma once

#include <string>

#include "klab/geometry.hpp"
#include "klab/jet.hpp"

namespace klab::testfns {

struct TestFunction {
  double beta = 0.0;
  double lambda = 0.0;
  double R = 0.25;
  geometry::ModelDomain domain{};
  Point center{};

  /// Jet of u at x up to the given order (<= 4). Throws SingularPoint on S.
  Jet jet(const Point& x, int order) const;
  double value(const Point& x) const;
  /// {beta, lambda, R, d, ell}
  std::string to_json() const;
};

TestFunction make_test_function(double beta, double lambda, double R, geometry::ModelDomain domain,
                                Point center = {});

/// d^alpha u(x). |alpha| > 4 throws Unsupported.
double eval_derivative(const TestFunction& u, const MultiIndex& alpha, const Point& x);

/// Jet of the radial cut-off zeta(|x - c| / R).
Jet cutoff_jet(const Point& x, const Point& c, double R, int dim, int order);

struct MembershipVerdict {
  bool member = false;
  bool determined = true;  // false: the rule used is not covered by the available statement
  double critical_exponent = 0.0;
  bool boundary_case = false;
  std::string note;
};

/// u in K^m_{a,p}: (beta - a) p + (d - l) > 0, or = 0 with lambda p < -1.
MembershipVerdict kondratiev_membership(const TestFunction& u, int m, double a, double p);

/// rho^beta (1 + |log rho|)^gamma zeta in F^s_{p,q} on R^d \ R^l:
/// s < (d - l)/p + beta, or equality with gamma p < -1 (gamma >= 0 only).
MembershipVerdict f_space_membership_radial(double beta, double gamma, double s, double p, int ell, int d);

}  // namespace klab::testfns

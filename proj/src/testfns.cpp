/**
 * @file testfns.cpp
 * @brief Test-function jets and membership rules.
 */
#include "klab/testfns.hpp"

#include <cmath>

#include "json.hpp"
#include "klab/errors.hpp"

namespace klab::testfns {

Jet cutoff_jet(const Point& x, const Point& c, double R, int dim, int order) {
  double r2 = 0.0;
  for (int i = 0; i < dim; ++i) r2 += (x[i] - c[i]) * (x[i] - c[i]);
  const double t = std::sqrt(r2) / R;
  if (t <= 1.0) return Jet::constant(dim, order, 1.0);
  if (t >= 2.0) return Jet(dim, order);
  Jet sq(dim, order);
  for (int i = 0; i < dim; ++i) {
    Jet xi = Jet::variable(dim, order, i, x[i] - c[i]);
    sq += xi * xi;
  }
  std::array<double, kMaxOrder + 1> z;
  geometry::profile::cutoff(t, z);
  return (sqrt(sq) * (1.0 / R)).apply(z);
}

Jet TestFunction::jet(const Point& x, int order) const {
  if (order > kMaxOrder) throw Unsupported("test function: derivative order above 4");
  const int d = domain.d;
  Jet zeta = cutoff_jet(x, center, R, d, order);
  if (zeta.value() == 0.0) return zeta;
  Jet rho = geometry::regularized_distance_jet(x, domain, order);
  Jet u = zeta;
  if (beta != 0.0) u = u * pow(rho, beta);
  if (lambda != 0.0) u = u * pow(-log(rho) + 1.0, lambda);
  return u;
}

double TestFunction::value(const Point& x) const { return jet(x, 0).value(); }

std::string TestFunction::to_json() const {
  nlohmann::ordered_json j;
  j["beta"] = beta;
  j["lambda"] = lambda;
  j["R"] = R;
  j["d"] = domain.d;
  j["ell"] = domain.ell;
  return j.dump();
}

TestFunction make_test_function(double beta, double lambda, double R, geometry::ModelDomain domain, Point center) {
  if (!(R > 0.0)) throw InvalidParams("test function: R must be positive");
  geometry::validate(domain);
  return TestFunction{beta, lambda, R, domain, center};
}

double eval_derivative(const TestFunction& u, const MultiIndex& alpha, const Point& x) {
  const int k = total_degree(alpha);
  if (k > kMaxOrder) throw Unsupported("eval_derivative: |alpha| above 4");
  for (int i = u.domain.d; i < kMaxDim; ++i)
    if (alpha[i] != 0) throw InvalidParams("eval_derivative: multi-index exceeds dimension");
  return u.jet(x, k).partial(alpha);
}

MembershipVerdict kondratiev_membership(const TestFunction& u, int m, double a, double p) {
  if (!(p > 0.0) || std::isinf(p)) throw InvalidParams("kondratiev_membership: need 0 < p < inf");
  if (m < 0 || m > kMaxOrder) throw Unsupported("kondratiev_membership: m outside 0..4");
  MembershipVerdict v;
  // The alpha = 0 term carries the largest weight exponent and the largest log power.
  const double e = (u.beta - a) * p + (u.domain.d - u.domain.ell);
  v.critical_exponent = e;
  if (e > 0.0) {
    v.member = true;
  } else if (e == 0.0) {
    v.boundary_case = true;
    v.member = u.lambda * p < -1.0;
  }
  return v;
}

MembershipVerdict f_space_membership_radial(double beta, double gamma, double s, double p, int ell, int d) {
  if (!(p > 0.0) || std::isinf(p)) throw InvalidParams("f_space_membership_radial: need 0 < p < inf");
  if (ell < 0 || ell >= d) throw InvalidParams("f_space_membership_radial: need 0 <= ell < d");
  MembershipVerdict v;
  const double crit = (d - ell) / p + beta;
  v.critical_exponent = crit;
  if (s < crit) {
    v.member = true;
  } else if (s == crit) {
    v.boundary_case = true;
    if (gamma < 0.0) {
      v.determined = false;
      v.note = "equality case with negative log power";
    } else {
      v.member = gamma * p < -1.0;
    }
  }
  return v;
}

}  // namespace klab::testfns

/**
 * @file field.hpp
 * @brief Compactly supported functions on a domain, given by their jets, and
 *        the operations the norm evaluators apply to them.
 */
#pragma once

#include <functional>
#include <memory>
#include <string>

#include "klab/geometry.hpp"
#include "klab/jet.hpp"
#include "klab/testfns.hpp"

namespace klab {

struct Field {
  geometry::Domain domain = geometry::ModelDomain{};
  /// supp u is contained in the closed ball B(center, radius).
  Point center{};
  double radius = 0.0;
  /// Jet at x up to the given order; throws SingularPoint on S.
  std::function<Jet(const Point&, int)> jet;

  int dim() const { return geometry::dimension(domain); }
  double value(const Point& x) const { return jet(x, 0).value(); }
};

Field from_test_function(const testfns::TestFunction& u);
Field zero_field(const geometry::Domain& domain);
/// d^alpha u.
Field derivative(const Field& u, const MultiIndex& alpha);
/// rho^gamma u.
Field times_rho_power(const Field& u, double gamma);
/// x -> u(2^k x). Only for model domains (S is dilation invariant).
Field dilate(const Field& u, int k);
Field scaled(const Field& u, double c);
/// phi_index u for a piece of a partition of unity.
Field times_partition_piece(const Field& u, std::shared_ptr<const geometry::PartitionOfUnity> pou, int index);

/// A diffeomorphism of the model domain fixing the singular set.
struct Diffeomorphism {
  std::string name;
  int dim = 2;
  /// Component jets of phi at x.
  std::function<std::array<Jet, kMaxDim>(const Point&, int)> map;
  std::function<Point(const Point&)> inverse;
  /// Lipschitz constant of the inverse on the relevant region.
  double inverse_lipschitz = 1.0;
  /// Bounds for the singular values of D phi over the relevant region.
  double sigma_min = 1.0;
  double sigma_max = 1.0;
  double det_min = 1.0;
  double det_max = 1.0;
  bool linear = true;
};

/// u o phi.
Field pull_back(const Field& u, const Diffeomorphism& phi);

namespace diffeo {
Diffeomorphism identity(int dim);
/// (x1, x2) -> (x1 + s x2, x2).
Diffeomorphism shear(double s);
Diffeomorphism rotation(double angle);
/// x -> R(kappa |x|^2) x, valid on |x| <= radius.
Diffeomorphism twist(double kappa, double radius);
/// Lookup by name: identity, shear, rotation, twist.
Diffeomorphism by_name(const std::string& name, int dim);
}  // namespace diffeo

}  // namespace klab

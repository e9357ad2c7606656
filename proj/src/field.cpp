/**
 * @file field.cpp
 * @brief Field wrappers and the built-in diffeomorphism catalog.
 */
#include "klab/field.hpp"

#include <cmath>

#include "klab/errors.hpp"

namespace klab {

Field from_test_function(const testfns::TestFunction& u) {
  Field f;
  f.domain = u.domain;
  f.center = u.center;
  f.radius = 2.0 * u.R;
  f.jet = [u](const Point& x, int order) { return u.jet(x, order); };
  return f;
}

Field zero_field(const geometry::Domain& domain) {
  Field f;
  f.domain = domain;
  const int d = geometry::dimension(domain);
  f.jet = [d](const Point&, int order) { return Jet(d, order); };
  return f;
}

Field derivative(const Field& u, const MultiIndex& alpha) {
  const int k = total_degree(alpha);
  Field f = u;
  f.jet = [inner = u.jet, alpha, k](const Point& x, int order) {
    if (order + k > kMaxOrder) throw Unsupported("derivative: total order above 4");
    return inner(x, order + k).derivative(alpha);
  };
  return f;
}

Field times_rho_power(const Field& u, double gamma) {
  if (gamma == 0.0) return u;
  Field f = u;
  f.jet = [inner = u.jet, domain = u.domain, gamma](const Point& x, int order) {
    Jet v = inner(x, order);
    if (v.value() == 0.0) {
      bool all_zero = true;
      for (double c : v.coefficients()) all_zero = all_zero && c == 0.0;
      if (all_zero) return v;
    }
    return v * pow(geometry::regularized_distance_jet(x, domain, order), gamma);
  };
  return f;
}

Field dilate(const Field& u, int k) {
  if (!std::holds_alternative<geometry::ModelDomain>(u.domain))
    throw InvalidParams("dilate: only model domains are dilation invariant");
  Field f = u;
  const double s = std::ldexp(1.0, k);
  for (int i = 0; i < kMaxDim; ++i) f.center[i] = u.center[i] / s;
  f.radius = u.radius / s;
  f.jet = [inner = u.jet, s, d = u.dim()](const Point& x, int order) {
    Point y{};
    for (int i = 0; i < d; ++i) y[i] = s * x[i];
    Jet v = inner(y, order);
    const auto& idx = multi_indices(d, order);
    auto c = v.coefficients();
    for (std::size_t i = 0; i < idx.size(); ++i) c[i] *= std::pow(s, total_degree(idx[i]));
    return v;
  };
  return f;
}

Field scaled(const Field& u, double c) {
  Field f = u;
  f.jet = [inner = u.jet, c](const Point& x, int order) { return inner(x, order) * c; };
  return f;
}

Field times_partition_piece(const Field& u, std::shared_ptr<const geometry::PartitionOfUnity> pou, int index) {
  const auto& q = pou->cover().cubes().at(index).cube;
  const int d = u.dim();
  const geometry::Box dbl = q.doubled(d);
  Field f = u;
  for (int i = 0; i < d; ++i) f.center[i] = 0.5 * (dbl.lo[i] + dbl.hi[i]);
  f.radius = q.side() * std::sqrt(static_cast<double>(d));
  f.jet = [inner = u.jet, pou, index, dbl, d](const Point& x, int order) {
    for (int i = 0; i < d; ++i)
      if (x[i] <= dbl.lo[i] || x[i] >= dbl.hi[i]) return Jet(d, order);
    std::vector<geometry::PartitionOfUnity::Term> terms;
    if (!pou->try_evaluate(x, order, terms)) return Jet(d, order);
    for (const auto& t : terms)
      if (t.index == index) return t.jet * inner(x, order);
    return Jet(d, order);
  };
  return f;
}

Field pull_back(const Field& u, const Diffeomorphism& phi) {
  if (phi.dim != u.dim()) throw InvalidParams("pull_back: dimension mismatch");
  Field f = u;
  f.center = phi.inverse(u.center);
  f.radius = u.radius * phi.inverse_lipschitz;
  f.jet = [inner = u.jet, map = phi.map, d = phi.dim](const Point& x, int order) {
    auto comps = map(x, order);
    Point y{};
    for (int i = 0; i < d; ++i) y[i] = comps[i].value();
    const Jet outer = inner(y, order);
    return compose(outer, std::span<const Jet>(comps.data(), static_cast<std::size_t>(d)));
  };
  return f;
}

namespace diffeo {

namespace {

std::array<Jet, kMaxDim> coordinate_jets(const Point& x, int d, int order) {
  std::array<Jet, kMaxDim> out;
  for (int i = 0; i < d; ++i) out[i] = Jet::variable(d, order, i, x[i]);
  return out;
}

double shear_sigma_max(double c) { return 0.5 * (std::abs(c) + std::sqrt(c * c + 4.0)); }

}  // namespace

Diffeomorphism identity(int dim) {
  Diffeomorphism phi;
  phi.name = "identity";
  phi.dim = dim;
  phi.map = [dim](const Point& x, int order) { return coordinate_jets(x, dim, order); };
  phi.inverse = [](const Point& y) { return y; };
  return phi;
}

Diffeomorphism shear(double s) {
  Diffeomorphism phi;
  phi.name = "shear";
  phi.dim = 2;
  phi.map = [s](const Point& x, int order) {
    auto c = coordinate_jets(x, 2, order);
    c[0] = c[0] + c[1] * s;
    return c;
  };
  phi.inverse = [s](const Point& y) { return Point{y[0] - s * y[1], y[1], 0.0}; };
  phi.sigma_max = shear_sigma_max(s);
  phi.sigma_min = 1.0 / phi.sigma_max;
  phi.inverse_lipschitz = phi.sigma_max;
  return phi;
}

Diffeomorphism rotation(double angle) {
  Diffeomorphism phi;
  phi.name = "rotation";
  phi.dim = 2;
  const double c = std::cos(angle), s = std::sin(angle);
  phi.map = [c, s](const Point& x, int order) {
    auto v = coordinate_jets(x, 2, order);
    const Jet x0 = v[0], x1 = v[1];
    v[0] = x0 * c - x1 * s;
    v[1] = x0 * s + x1 * c;
    return v;
  };
  phi.inverse = [c, s](const Point& y) { return Point{c * y[0] + s * y[1], -s * y[0] + c * y[1], 0.0}; };
  return phi;
}

Diffeomorphism twist(double kappa, double radius) {
  Diffeomorphism phi;
  phi.name = "twist";
  phi.dim = 2;
  phi.linear = false;
  phi.map = [kappa](const Point& x, int order) {
    auto v = coordinate_jets(x, 2, order);
    const Jet theta = (v[0] * v[0] + v[1] * v[1]) * kappa;
    const double t = theta.value();
    const std::array<double, kMaxOrder + 1> dc{std::cos(t), -std::sin(t), -std::cos(t), std::sin(t), std::cos(t)};
    const std::array<double, kMaxOrder + 1> ds{std::sin(t), std::cos(t), -std::sin(t), -std::cos(t), std::sin(t)};
    const Jet c = theta.apply(dc), s = theta.apply(ds);
    const Jet x0 = v[0], x1 = v[1];
    v[0] = c * x0 - s * x1;
    v[1] = s * x0 + c * x1;
    return v;
  };
  phi.inverse = [kappa](const Point& y) {
    const double t = -kappa * (y[0] * y[0] + y[1] * y[1]);
    return Point{std::cos(t) * y[0] - std::sin(t) * y[1], std::sin(t) * y[0] + std::cos(t) * y[1], 0.0};
  };
  // In polar coordinates the map is (r, theta) -> (r, theta + kappa r^2).
  phi.sigma_max = shear_sigma_max(2.0 * kappa * radius * radius);
  phi.sigma_min = 1.0 / phi.sigma_max;
  phi.inverse_lipschitz = phi.sigma_max;
  return phi;
}

Diffeomorphism by_name(const std::string& name, int dim) {
  if (name == "identity") return identity(dim);
  if (dim != 2) throw InvalidParams("diffeomorphism catalog: planar maps need d = 2");
  if (name == "shear") return shear(0.3);
  if (name == "rotation") return rotation(0.7);
  if (name == "twist") return twist(0.5, 1.0);
  throw InvalidParams("unknown diffeomorphism: " + name);
}

}  // namespace diffeo

}  // namespace klab

/**
 * @file jet.hpp
 * @brief Truncated multivariate Taylor polynomials ("jets") in up to three
 *        variables and up to total order four.
 *
 * A Jet stores the Taylor coefficients of a smooth function at a point,
 * f(x0 + h) = sum_alpha c_alpha h^alpha, truncated at |alpha| <= order.
 * Arithmetic on jets is exact chain-rule/product-rule differentiation, so a
 * closed-form function assembled from jets carries all of its partial
 * derivatives up to the truncation order.
 */
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace klab {

inline constexpr int kMaxDim = 3;
inline constexpr int kMaxOrder = 4;
inline constexpr int kMaxMonomials = 35;  // C(kMaxOrder + kMaxDim, kMaxDim)

using MultiIndex = std::array<int, kMaxDim>;

inline int total_degree(const MultiIndex& a) { return a[0] + a[1] + a[2]; }

/// All multi-indices in d variables with |alpha| <= order, graded order.
const std::vector<MultiIndex>& multi_indices(int d, int order);

/// Multi-indices with |alpha| == order exactly.
std::vector<MultiIndex> multi_indices_of_degree(int d, int order);

/// Number of distinct multi-indices.
int monomial_count(int d, int order);

class Jet {
 public:
  Jet() = default;
  Jet(int dim, int order);

  static Jet constant(int dim, int order, double value);
  /// The coordinate function x_i expanded at x0_i.
  static Jet variable(int dim, int order, int i, double x0_i);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int size() const;

  double value() const { return c_[0]; }
  /// Taylor coefficient of h^alpha.
  double coeff(const MultiIndex& alpha) const;
  double& coeff_ref(const MultiIndex& alpha);
  /// Partial derivative d^alpha f(x0) = alpha! * coeff(alpha).
  double partial(const MultiIndex& alpha) const;

  /// Jet of d^alpha f, truncated at order() - |alpha|.
  Jet derivative(const MultiIndex& alpha) const;
  /// Same coefficients, lower truncation order.
  Jet truncated(int order) const;

  std::span<const double> coefficients() const { return {c_.data(), static_cast<std::size_t>(size())}; }
  std::span<double> coefficients() { return {c_.data(), static_cast<std::size_t>(size())}; }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator+=(double s) { c_[0] += s; return *this; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet operator-() const { Jet r = *this; r *= -1.0; return r; }

  /// f(J) given f^(k)(J.value()) for k = 0..order().
  Jet apply(std::span<const double> derivatives) const;

 private:
  int dim_ = 1;
  int order_ = 0;
  std::array<double, kMaxMonomials> c_{};
};

/// Elementary functions lifted to jets. Arguments must lie in the domain.
Jet pow(const Jet& x, double exponent);
Jet log(const Jet& x);
Jet exp(const Jet& x);
Jet sqrt(const Jet& x);
Jet reciprocal(const Jet& x);

/// outer(inner_1, ..., inner_d): outer is a jet expanded at
/// (inner_1.value(), ..., inner_d.value()); the inner jets may live in a
/// different number of variables but share one truncation order.
Jet compose(const Jet& outer, std::span<const Jet> inner);

}  // namespace klab

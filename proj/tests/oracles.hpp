/**
 * @file oracles.hpp
 * @brief Independent reference values for the tests: closed-form profiles and
 *        one-dimensional radial integrals that bypass jets and Whitney covers.
 */
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// 126x^5 - 420x^6 + 540x^7 - 315x^8 + 70x^9 clamped to [0,1].
inline double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * x * x * (126.0 + x * (-420.0 + x * (540.0 + x * (-315.0 + 70.0 * x))));
}

inline double smoothstep_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return x * x * x * x * (630.0 + x * (-2520.0 + x * (3780.0 + x * (-2520.0 + 630.0 * x))));
}

/// 1 on [0,1], 0 on [2, inf).
inline double zeta(double t) { return 1.0 - smoothstep(t - 1.0); }
inline double zeta_prime(double t) { return -smoothstep_prime(t - 1.0); }

/// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on P_n.
struct Gauss {
  std::vector<double> x, w;
  explicit Gauss(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

/// int_a^b f by composite Gauss-Legendre.
inline double integrate(const std::function<double(double)>& f, double a, double b, int pieces = 64) {
  static const Gauss g(20);
  double s = 0.0;
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    for (std::size_t k = 0; k < g.x.size(); ++k) s += 0.5 * h * g.w[k] * f(lo + 0.5 * h * (g.x[k] + 1.0));
  }
  return s;
}

/// int_0^b f with a geometric grading towards 0 (levels 2^-k b, k < levels).
inline double integrate_graded(const std::function<double(double)>& f, double b, int levels = 200) {
  double s = 0.0;
  double hi = b;
  for (int k = 0; k < levels; ++k) {
    const double lo = 0.5 * hi;
    s += integrate(f, lo, hi, 2);
    hi = lo;
  }
  return s;
}

inline double sphere_area(int d) {
  if (d == 1) return 2.0;
  if (d == 2) return 2.0 * std::numbers::pi;
  return 4.0 * std::numbers::pi;
}

/// u(r) = r^beta (1 + |log r|)^lambda zeta(r / R) and u'(r), r <= 1/2 assumed.
inline double radial_u(double r, double beta, double lambda, double R) {
  return std::pow(r, beta) * std::pow(1.0 - std::log(r), lambda) * zeta(r / R);
}

inline double radial_du(double r, double beta, double lambda, double R) {
  const double L = 1.0 - std::log(r);
  const double core = std::pow(r, beta) * std::pow(L, lambda);
  const double dcore = std::pow(r, beta - 1.0) * std::pow(L, lambda) * beta -
                       std::pow(r, beta - 1.0) * lambda * std::pow(L, lambda - 1.0);
  return dcore * zeta(r / R) + core * zeta_prime(r / R) / R;
}

/// ||rho^w u | L_p||^p on R^d \ {0} for the radial family (2R <= 1/2).
inline double weighted_lp_power(int d, double beta, double lambda, double R, double w, double p) {
  auto f = [=](double r) {
    return std::pow(std::abs(std::pow(r, w) * radial_u(r, beta, lambda, R)), p) * std::pow(r, d - 1);
  };
  return sphere_area(d) * integrate_graded(f, 2.0 * R);
}

/// ||u | K^1_{a,2}||^2 on R^d \ {0}: sum_{|alpha| = 1} |d^alpha u|^2 = |u'|^2 for radial u.
inline double kondratiev_1_2_power(int d, double beta, double lambda, double R, double a) {
  auto f = [=](double r) {
    const double u = radial_u(r, beta, lambda, R), du = radial_du(r, beta, lambda, R);
    return (std::pow(r, -2.0 * a) * u * u + std::pow(r, 2.0 - 2.0 * a) * du * du) * std::pow(r, d - 1);
  };
  return sphere_area(d) * integrate_graded(f, 2.0 * R);
}

}  // namespace oracle

/**
 * @file radial.cpp
 */
#include "klab/radial.hpp"

#include <cmath>
#include <numbers>

#include "klab/errors.hpp"
#include "klab/parallel.hpp"

namespace klab::radial {

namespace {

constexpr int kRadialNodes = 16;
constexpr int kCircleNodes = 64;
constexpr int kPolarNodes = 16;
constexpr int kAzimuthNodes = 32;

struct Direction {
  Point omega{};
  double weight = 0.0;
};

// Quadrature on the unit sphere S^{d-1}; weights sum to its area.
std::vector<Direction> sphere_rule(int d) {
  std::vector<Direction> dirs;
  if (d == 1) {
    dirs.push_back({{1.0, 0.0, 0.0}, 1.0});
    dirs.push_back({{-1.0, 0.0, 0.0}, 1.0});
  } else if (d == 2) {
    for (int i = 0; i < kCircleNodes; ++i) {
      const double th = 2.0 * std::numbers::pi * (i + 0.5) / kCircleNodes;
      dirs.push_back({{std::cos(th), std::sin(th), 0.0}, 2.0 * std::numbers::pi / kCircleNodes});
    }
  } else {
    const auto& gl = quadrature::gauss_legendre(kPolarNodes);
    for (int i = 0; i < kPolarNodes; ++i) {
      const double c = 2.0 * gl.nodes[i] - 1.0;
      const double s = std::sqrt(1.0 - c * c);
      for (int j = 0; j < kAzimuthNodes; ++j) {
        const double ph = 2.0 * std::numbers::pi * (j + 0.5) / kAzimuthNodes;
        dirs.push_back({{s * std::cos(ph), s * std::sin(ph), c}, 2.0 * gl.weights[i] * 2.0 * std::numbers::pi / kAzimuthNodes});
      }
    }
  }
  return dirs;
}

// Points of the annulus 1 <= |y| <= 2 with weights (Gauss in log r).
std::vector<std::pair<Point, double>> annulus_rule(int d) {
  const auto& gl = quadrature::gauss_legendre(kRadialNodes);
  const auto dirs = sphere_rule(d);
  const double h = std::numbers::ln2;
  std::vector<std::pair<Point, double>> nodes;
  for (int i = 0; i < kRadialNodes; ++i) {
    const double r = std::exp(h * gl.nodes[i]);
    const double wr = h * gl.weights[i] * std::pow(r, d);
    for (const auto& dir : dirs) {
      Point y{};
      for (int c = 0; c < d; ++c) y[c] = r * dir.omega[c];
      nodes.emplace_back(y, wr * dir.weight);
    }
  }
  return nodes;
}

double weighted_sum(const Jet& j, const std::vector<MultiIndex>& alphas, double rho, double a, double p) {
  double s = 0.0;
  for (const auto& al : alphas) {
    const double v = std::abs(std::pow(rho, total_degree(al) - a) * j.partial(al));
    s += p == 2.0 ? v * v : std::pow(v, p);
  }
  return s;
}

// |y|^beta (T - log|y|)^lambda
Jet scaled_profile(const Point& y, int d, int order, double beta, double lambda, double T) {
  Jet r2(d, order);
  for (int i = 0; i < d; ++i) {
    const Jet yi = Jet::variable(d, order, i, y[i]);
    r2 += yi * yi;
  }
  const Jet r = sqrt(r2);
  Jet v = pow(r, beta);
  if (lambda != 0.0) v = v * pow(-log(r) + T, lambda);
  return v;
}

Ladder accumulate(int k0, int k_max, const std::vector<double>& shells) {
  Ladder l;
  double acc = 0.0;
  for (int k = k0; k <= k_max; ++k) {
    acc += shells[k - k0];
    l.k.push_back(k);
    l.t.push_back(k * std::numbers::ln2);
    l.power.push_back(acc);
  }
  return l;
}

double ratio_model(double g, double x1, double x2, double x3) {
  if (std::abs(g) < 1e-12) return std::log(x3 / x2) / std::log(x2 / x1);
  return (std::pow(x3, g) - std::pow(x2, g)) / (std::pow(x2, g) - std::pow(x1, g));
}

}  // namespace

Ladder shell_ladder(const testfns::TestFunction& u, const Integrand& f, int k_max) {
  if (u.domain.ell != 0) throw Unsupported("shell_ladder: needs an isolated singular point");
  for (double c : u.center)
    if (c != 0.0) throw Unsupported("shell_ladder: family must be centered at the singular point");
  if (f.m_min < 0 || f.m_max < f.m_min || f.m_max > kMaxOrder) throw InvalidParams("shell_ladder: bad orders");
  if (!(f.p > 0.0)) throw InvalidParams("shell_ladder: need p > 0");
  const int d = u.domain.d;
  std::vector<MultiIndex> alphas;
  for (const auto& al : multi_indices(d, f.m_max))
    if (total_degree(al) >= f.m_min) alphas.push_back(al);
  const auto nodes = annulus_rule(d);
  const int k0 = 1 - static_cast<int>(std::ceil(std::log2(2.0 * u.R)));
  if (k_max < k0) throw InvalidParams("shell_ladder: k_max below the support scale");
  const double scaled_top = std::min(u.R, 0.5);
  const double E = (u.beta - f.a) * f.p + d;

  std::vector<double> shells(k_max - k0 + 1, 0.0);
  parallel_for(shells.size(), [&](std::size_t n) {
    const int k = k0 + static_cast<int>(n);
    const double h = std::ldexp(1.0, -k);
    double s = 0.0;
    if (2.0 * h <= scaled_top) {
      const double T = 1.0 + k * std::numbers::ln2;
      for (const auto& [y, w] : nodes) {
        double r = 0.0;
        for (int c = 0; c < d; ++c) r += y[c] * y[c];
        r = std::sqrt(r);
        s += w * weighted_sum(scaled_profile(y, d, f.m_max, u.beta, u.lambda, T), alphas, r, f.a, f.p);
      }
      s = s > 0.0 ? std::exp(std::log(s) - E * k * std::numbers::ln2) : 0.0;
    } else {
      const double vol = std::pow(h, d);
      for (const auto& [y, w] : nodes) {
        Point x{};
        for (int c = 0; c < d; ++c) x[c] = h * y[c];
        const Jet j = u.jet(x, f.m_max);
        s += w * vol * weighted_sum(j, alphas, geometry::regularized_distance(x, u.domain), f.a, f.p);
      }
    }
    shells[n] = s;
  });
  return accumulate(k0, k_max, shells);
}

Ladder radial_integral_ladder(double e, double g, int k_max) {
  const auto& gl = quadrature::gauss_legendre(kRadialNodes);
  const double hl = std::numbers::ln2;
  std::vector<double> shells(k_max, 0.0);
  for (int k = 1; k <= k_max; ++k) {
    const double T = 1.0 + k * std::numbers::ln2;
    double s = 0.0;
    for (int i = 0; i < kRadialNodes; ++i) {
      const double ls = hl * gl.nodes[i];
      s += hl * gl.weights[i] * std::exp((e + 1.0) * ls) * std::pow(T - ls, g);
    }
    shells[k - 1] = std::exp(std::log(s) - (e + 1.0) * k * std::numbers::ln2);
  }
  return accumulate(1, k_max, shells);
}

GrowthFit fit_growth(const Ladder& ladder) {
  const std::size_t n = ladder.t.size();
  if (n < 8) throw InvalidParams("fit_growth: ladder too short");
  const std::size_t i3 = n - 1, i2 = n / 2, i1 = n / 4;
  const double x1 = 1.0 + ladder.t[i1], x2 = 1.0 + ladder.t[i2], x3 = 1.0 + ladder.t[i3];
  const double V1 = ladder.power[i1], V2 = ladder.power[i2], V3 = ladder.power[i3];
  GrowthFit fit;
  const double target = (V3 - V2) / (V2 - V1);
  if (!(std::isfinite(target)) || !(target > 0.0)) {
    fit.residual = INFINITY;
    return fit;
  }
  // the model ratio increases with gamma
  double lo = -4.0, hi = 4.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ratio_model(mid, x1, x2, x3) < target) lo = mid;
    else hi = mid;
  }
  fit.gamma = 0.5 * (lo + hi);
  const auto basis = [&](double x) { return std::abs(fit.gamma) < 1e-12 ? std::log(x) : std::pow(x, fit.gamma); };
  fit.B = (V3 - V2) / (basis(x3) - basis(x2));
  fit.A = V3 - fit.B * basis(x3);
  for (std::size_t i = i2; i < n; ++i) {
    const double model = fit.A + fit.B * basis(1.0 + ladder.t[i]);
    fit.residual = std::max(fit.residual, std::abs(model - ladder.power[i]) / std::abs(ladder.power[i]));
  }
  return fit;
}

bool is_cauchy(const Ladder& ladder, double p) {
  const std::size_t n = ladder.power.size();
  if (n < 4) return false;
  for (std::size_t i = n - 3; i < n; ++i) {
    const double prev = std::pow(ladder.power[i - 1], 1.0 / p);
    const double cur = std::pow(ladder.power[i], 1.0 / p);
    if (!std::isfinite(cur) || !(cur > 0.0) || std::abs(cur - prev) / cur >= quadrature::kCauchyTolerance) return false;
  }
  return true;
}

}  // namespace klab::radial

/**
 * @file quadrature.cpp
 */
#include "klab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "klab/errors.hpp"
#include "klab/parallel.hpp"

namespace klab::quadrature {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (n == 1) p0 = 1.0;
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

Rule build_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // [-1, 1] -> [0, 1], ascending nodes
    r.nodes[i] = 0.5 * (1.0 - x);
    r.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    r.weights[i] = r.weights[n - 1 - i] = 0.5 * w;
  }
  return r;
}

std::string domain_key(const geometry::Domain& domain) {
  std::ostringstream s;
  s.precision(17);
  if (const auto* m = std::get_if<geometry::ModelDomain>(&domain)) {
    s << "model:" << m->d << ":" << m->ell;
  } else {
    s << "poly";
    for (const auto& v : std::get<geometry::PolygonSingularSet>(domain).vertices) s << ":" << v[0] << "," << v[1];
  }
  return s.str();
}

bool box_meets_ball(const geometry::Box& b, const Point& c, double r) {
  double s = 0.0;
  for (int i = 0; i < b.d; ++i) {
    double g = 0.0;
    if (c[i] < b.lo[i]) g = b.lo[i] - c[i];
    else if (c[i] > b.hi[i]) g = c[i] - b.hi[i];
    s += g * g;
  }
  return s <= r * r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> all(65);
    for (int k = 1; k <= 64; ++k) all[k] = build_rule(k);
    return all;
  }();
  if (n < 1 || n > 64) throw InvalidParams("gauss_legendre: need 1 <= n <= 64");
  return rules[n];
}

double integrate_box(const geometry::Box& box, const Integrand& f, int cells, int nodes) {
  const Rule& rule = gauss_legendre(nodes);
  const int d = box.d;
  std::array<double, kMaxDim> h{};
  double jac = 1.0;
  for (int i = 0; i < d; ++i) {
    h[i] = (box.hi[i] - box.lo[i]) / cells;
    jac *= h[i];
  }
  const int per_axis = cells * nodes;
  std::array<int, kMaxDim> idx{};
  double sum = 0.0;
  Point x{};
  for (;;) {
    double w = jac;
    for (int i = 0; i < d; ++i) {
      const int cell = idx[i] / nodes, node = idx[i] % nodes;
      x[i] = box.lo[i] + h[i] * (cell + rule.nodes[node]);
      w *= rule.weights[node];
    }
    sum += w * f(x);
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[axis] < per_axis) break;
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return sum;
}

double LevelSums::total() const {
  double s = 0.0;
  for (double v : sums) s += v;
  return s;
}

double LevelSums::up_to(int k) const {
  double s = 0.0;
  for (int j = start_level; j <= k && j - start_level < static_cast<int>(sums.size()); ++j) s += sums[j - start_level];
  return s;
}

geometry::Box support_box(const Field& u) {
  const int d = u.dim();
  double extent = 0.0;
  for (int i = 0; i < d; ++i) extent = std::max(extent, std::abs(u.center[i]) + u.radius);
  if (!(extent > 0.0)) extent = 1.0;
  const double B = std::ldexp(1.0, static_cast<int>(std::ceil(std::log2(extent))));
  return geometry::Box::centered(d, B);
}

std::shared_ptr<const geometry::WhitneyCover> cover_for(const Field& u, int max_level) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const geometry::WhitneyCover>> cache;
  const geometry::Box box = support_box(u);
  std::ostringstream key;
  key.precision(17);
  key << domain_key(u.domain) << "|" << box.hi[0] << "|" << max_level;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  auto cover = std::make_shared<const geometry::WhitneyCover>(geometry::whitney_cover(u.domain, box, max_level));
  cache.emplace(key.str(), cover);
  return cover;
}

LevelSums integrate_graded(const Field& u, const Integrand& f, const Options& opt) {
  const auto cover = cover_for(u, opt.max_level);
  const int d = u.dim();
  std::vector<int> active;
  const auto& cubes = cover->cubes();
  for (std::size_t i = 0; i < cubes.size(); ++i)
    if (box_meets_ball(cubes[i].cube.box(d), u.center, u.radius)) active.push_back(static_cast<int>(i));

  std::vector<double> values(active.size(), 0.0);
  const int j0 = cover->start_level();
  parallel_for(active.size(), [&](std::size_t n) {
    const auto& q = cubes[active[n]].cube;
    const int cell_level = std::max(q.level, j0 + opt.cell_offset);
    values[n] = integrate_box(q.box(d), f, 1 << (cell_level - q.level), opt.nodes);
  });

  LevelSums out;
  out.start_level = j0;
  out.sums.assign(cover->max_level() - j0 + 1, 0.0);
  for (std::size_t n = 0; n < active.size(); ++n) out.sums[cubes[active[n]].cube.level - j0] += values[n];
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Finite: return "Finite";
    case Classification::Divergent: return "Divergent";
    default: return "Inconclusive";
  }
}

Classification classify_ladder(const std::vector<double>& power_ladder, double p, std::optional<bool> oracle_finite) {
  const std::size_t n = power_ladder.size();
  if (n < 4) return Classification::Inconclusive;
  for (double v : power_ladder)
    if (!std::isfinite(v)) return oracle_finite.value_or(false) ? Classification::Inconclusive : Classification::Divergent;
  const double last = power_ladder.back();
  if (last == 0.0) return Classification::Finite;
  bool cauchy = true;
  for (std::size_t k = n - 3; k < n; ++k) {
    const double v1 = std::pow(power_ladder[k], 1.0 / p), v0 = std::pow(power_ladder[k - 1], 1.0 / p);
    if (!(std::abs(v1 - v0) < kCauchyTolerance * std::abs(v1))) cauchy = false;
  }
  if (cauchy) return Classification::Finite;
  double log_ratio = 0.0;
  for (std::size_t k = n - 3; k < n; ++k) {
    const double num = power_ladder[k] - power_ladder[k - 1];
    const double den = power_ladder[k - 1] - power_ladder[k - 2];
    if (!(num > 0.0) || !(den > 0.0)) return Classification::Inconclusive;
    log_ratio += std::log(num / den);
  }
  const double ratio = std::exp(log_ratio / 3.0);
  if (ratio >= kDivergentRatio && !oracle_finite.value_or(false)) return Classification::Divergent;
  return Classification::Inconclusive;
}

}  // namespace klab::quadrature

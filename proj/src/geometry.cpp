/**
 * @file geometry.cpp
 * @brief Distances, the capped regularized distance, Whitney covers and the
 *        bump-quotient partition of unity.
 */
#include "klab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "klab/errors.hpp"

namespace klab::geometry {

namespace {

using Derivs = std::array<double, kMaxOrder + 1>;

// S(x) = 126x^5 - 420x^6 + 540x^7 - 315x^8 + 70x^9
constexpr std::array<double, 10> kSmoothstep{0, 0, 0, 0, 0, 126, -420, 540, -315, 70};
// int_0^x S
constexpr std::array<double, 11> kSmoothstepIntegral{0, 0, 0, 0, 0, 0, 21, -60, 67.5, -35, 7};

template <std::size_t N>
void polynomial(const std::array<double, N>& c, double x, int count, double* out) {
  // out[k] = p^(k)(x), k < count
  for (int k = 0; k < count; ++k) {
    double acc = 0.0;
    for (int n = static_cast<int>(N) - 1; n >= k; --n) {
      double f = 1.0;
      for (int i = 0; i < k; ++i) f *= (n - i);
      acc = acc * x + c[n] * f;
    }
    out[k] = acc;
  }
}

void require_point_off_set(double dist) {
  if (!(dist > 0.0)) throw SingularPoint("point lies on the singular set");
}

}  // namespace

namespace profile {

void smoothstep(double x, Derivs& out) {
  out.fill(0.0);
  if (x <= 0.0) return;
  if (x >= 1.0) {
    out[0] = 1.0;
    return;
  }
  polynomial(kSmoothstep, x, kMaxOrder + 1, out.data());
}

void cap(double t, Derivs& out) {
  out.fill(0.0);
  if (t <= 0.5) {
    out[0] = t;
    out[1] = 1.0;
    return;
  }
  if (t >= 1.5) {
    out[0] = 1.0;
    return;
  }
  const double s = t - 0.5;
  double integral = 0.0;
  polynomial(kSmoothstepIntegral, s, 1, &integral);
  Derivs sd;
  smoothstep(s, sd);
  out[0] = 0.5 + s - integral;
  out[1] = 1.0 - sd[0];
  for (int k = 2; k <= kMaxOrder; ++k) out[k] = -sd[k - 1];
}

void cutoff(double t, Derivs& out) {
  out.fill(0.0);
  if (t <= 1.0) {
    out[0] = 1.0;
    return;
  }
  if (t >= 2.0) return;
  Derivs sd;
  smoothstep(t - 1.0, sd);
  out[0] = 1.0 - sd[0];
  for (int k = 1; k <= kMaxOrder; ++k) out[k] = -sd[k];
}

void bump(double t, Derivs& out) {
  out.fill(0.0);
  if (t <= -0.5 || t >= 1.5) return;
  if (t >= 0.0 && t <= 1.0) {
    out[0] = 1.0;
    return;
  }
  Derivs sd;
  const bool rising = t < 0.0;
  smoothstep(rising ? 2.0 * t + 1.0 : 3.0 - 2.0 * t, sd);
  const double chain = rising ? 2.0 : -2.0;
  double f = 1.0;
  for (int k = 0; k <= kMaxOrder; ++k) {
    out[k] = f * sd[k];
    f *= chain;
  }
}

double bump_value(double t) {
  if (t <= -0.5 || t >= 1.5) return 0.0;
  if (t >= 0.0 && t <= 1.0) return 1.0;
  double s = t < 0.0 ? 2.0 * t + 1.0 : 3.0 - 2.0 * t;
  double v = 0.0;
  polynomial(kSmoothstep, s, 1, &v);
  return v;
}

}  // namespace profile

void validate(const Domain& domain) {
  if (const auto* m = std::get_if<ModelDomain>(&domain)) {
    if (m->d < 1 || m->d > kMaxDim) throw InvalidParams("model domain: d must be in 1..3");
    if (m->ell < 0 || m->ell >= m->d) throw InvalidParams("model domain: need 0 <= ell < d");
    return;
  }
  const auto& poly = std::get<PolygonSingularSet>(domain);
  if (poly.vertices.empty()) throw InvalidParams("polygon singular set: no vertices");
  if (poly.vertices.size() > kMaxPolygonVertices)
    throw InvalidParams("polygon singular set: too many vertices for the soft-min bound");
  for (std::size_t i = 0; i < poly.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < poly.vertices.size(); ++j)
      if (poly.vertices[i] == poly.vertices[j]) throw InvalidParams("polygon singular set: repeated vertex");
}

int dimension(const Domain& domain) {
  if (const auto* m = std::get_if<ModelDomain>(&domain)) return m->d;
  return 2;
}

int singular_dimension(const Domain& domain) {
  if (const auto* m = std::get_if<ModelDomain>(&domain)) return m->ell;
  return 0;
}

double distance_to_singular_set(const Point& x, const Domain& domain) {
  double dist;
  if (const auto* m = std::get_if<ModelDomain>(&domain)) {
    double s = 0.0;
    for (int i = m->ell; i < m->d; ++i) s += x[i] * x[i];
    dist = std::sqrt(s);
  } else {
    dist = std::numeric_limits<double>::infinity();
    for (const auto& v : std::get<PolygonSingularSet>(domain).vertices)
      dist = std::min(dist, std::hypot(x[0] - v[0], x[1] - v[1]));
  }
  require_point_off_set(dist);
  return dist;
}

namespace {

double soft_min_distance(const Point& x, const PolygonSingularSet& poly) {
  double s = 0.0;
  for (const auto& v : poly.vertices) {
    const double di = std::hypot(x[0] - v[0], x[1] - v[1]);
    require_point_off_set(di);
    s += std::pow(di, -kSoftMinPower);
  }
  return std::pow(s, -1.0 / kSoftMinPower);
}

}  // namespace

double regularized_distance(const Point& x, const Domain& domain) {
  double raw;
  if (std::holds_alternative<ModelDomain>(domain)) {
    raw = distance_to_singular_set(x, domain);
  } else {
    raw = soft_min_distance(x, std::get<PolygonSingularSet>(domain));
  }
  Derivs eta;
  profile::cap(raw, eta);
  return eta[0];
}

Jet regularized_distance_jet(const Point& x, const Domain& domain, int order) {
  const int d = dimension(domain);
  Jet raw;
  if (const auto* m = std::get_if<ModelDomain>(&domain)) {
    require_point_off_set(distance_to_singular_set(x, domain));
    Jet sq(d, order);
    for (int i = m->ell; i < m->d; ++i) {
      Jet xi = Jet::variable(d, order, i, x[i]);
      sq += xi * xi;
    }
    raw = sqrt(sq);
  } else {
    const auto& poly = std::get<PolygonSingularSet>(domain);
    Jet acc(d, order);
    for (const auto& v : poly.vertices) {
      Jet dx = Jet::variable(d, order, 0, x[0] - v[0]);
      Jet dy = Jet::variable(d, order, 1, x[1] - v[1]);
      Jet sq = dx * dx + dy * dy;
      require_point_off_set(sq.value());
      acc += pow(sq, -0.5 * kSoftMinPower);
    }
    raw = pow(acc, -1.0 / kSoftMinPower);
  }
  Derivs eta;
  profile::cap(raw.value(), eta);
  return raw.apply(eta);
}

double Box::volume() const {
  double v = 1.0;
  for (int i = 0; i < d; ++i) v *= hi[i] - lo[i];
  return v;
}

bool Box::contains(const Point& x) const {
  for (int i = 0; i < d; ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

Box Box::centered(int d, double half) {
  Box b;
  b.d = d;
  for (int i = 0; i < d; ++i) {
    b.lo[i] = -half;
    b.hi[i] = half;
  }
  return b;
}

double DyadicCube::side() const { return std::ldexp(1.0, -level); }

Point DyadicCube::corner() const {
  Point c{};
  for (int i = 0; i < kMaxDim; ++i) c[i] = std::ldexp(static_cast<double>(k[i]), -level);
  return c;
}

Box DyadicCube::box(int d) const {
  Box b;
  b.d = d;
  const double h = side();
  const Point c = corner();
  for (int i = 0; i < d; ++i) {
    b.lo[i] = c[i];
    b.hi[i] = c[i] + h;
  }
  return b;
}

Box DyadicCube::doubled(int d) const {
  Box b = box(d);
  const double h = side();
  for (int i = 0; i < d; ++i) {
    b.lo[i] -= 0.5 * h;
    b.hi[i] += 0.5 * h;
  }
  return b;
}

std::size_t DyadicCubeHash::operator()(const DyadicCube& c) const {
  std::size_t h = std::hash<int>()(c.level);
  for (auto v : c.k) h ^= std::hash<std::int64_t>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

double box_distance_to_singular_set(const Box& b, const Domain& domain) {
  auto axis_gap = [](double lo, double hi, double v) {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
  };
  if (const auto* m = std::get_if<ModelDomain>(&domain)) {
    double s = 0.0;
    for (int i = m->ell; i < m->d; ++i) {
      const double g = axis_gap(b.lo[i], b.hi[i], 0.0);
      s += g * g;
    }
    return std::sqrt(s);
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : std::get<PolygonSingularSet>(domain).vertices)
    best = std::min(best, std::hypot(axis_gap(b.lo[0], b.hi[0], v[0]), axis_gap(b.lo[1], b.hi[1], v[1])));
  return best;
}

WhitneyCover::WhitneyCover(Domain domain, Box box, int start_level, int max_level, double c1, double c2,
                           std::vector<std::vector<WhitneyCube>> levels, double collar_volume)
    : domain_(std::move(domain)),
      box_(box),
      start_level_(start_level),
      max_level_(max_level),
      c1_(c1),
      c2_(c2),
      levels_(std::move(levels)),
      collar_volume_(collar_volume) {
  for (const auto& lv : levels_)
    for (const auto& c : lv) {
      index_.emplace(c.cube, static_cast<int>(flat_.size()));
      flat_.push_back(c);
    }
}

const std::vector<WhitneyCube>& WhitneyCover::level(int j) const {
  static const std::vector<WhitneyCube> empty;
  if (j < start_level_ || j > max_level_) return empty;
  return levels_[j - start_level_];
}

int WhitneyCover::find(const DyadicCube& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

double WhitneyCover::covered_volume() const {
  double v = 0.0;
  for (const auto& c : flat_) v += std::pow(c.cube.side(), box_.d);
  return v;
}

std::size_t WhitneyCover::certificate_violations() const {
  std::size_t bad = 0;
  for (const auto& c : flat_) {
    const double h = c.cube.side();
    const double dist = box_distance_to_singular_set(c.cube.doubled(box_.d), domain_);
    if (dist != c.dist) ++bad;
    if (dist < c1_ * h) ++bad;
    if (c.cube.level > start_level_ && dist > c2_ * h) ++bad;
  }
  return bad;
}

std::string WhitneyCover::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "klab-whitney/1";
  j["d"] = box_.d;
  j["singular_dimension"] = singular_dimension(domain_);
  j["box"] = {{"lo", std::vector<double>(box_.lo.begin(), box_.lo.begin() + box_.d)},
              {"hi", std::vector<double>(box_.hi.begin(), box_.hi.begin() + box_.d)}};
  j["start_level"] = start_level_;
  j["max_level"] = max_level_;
  j["c1"] = c1_;
  j["c2"] = c2_;
  j["collar_volume"] = collar_volume_;
  auto cubes = nlohmann::ordered_json::array();
  for (const auto& c : flat_) {
    cubes.push_back({{"level", c.cube.level},
                     {"k", std::vector<std::int64_t>(c.cube.k.begin(), c.cube.k.begin() + box_.d)},
                     {"dist", c.dist}});
  }
  j["cubes"] = std::move(cubes);
  return j.dump(1);
}

WhitneyCover whitney_cover(const Domain& domain, const Box& box, int max_level, WhitneyConstants constants) {
  validate(domain);
  const int d = dimension(domain);
  if (box.d != d) throw InvalidParams("whitney_cover: box dimension differs from domain dimension");
  if (max_level < 2) throw InvalidParams("whitney_cover: max level must be at least 2");
  for (int i = 0; i < d; ++i)
    if (!(box.hi[i] > box.lo[i])) throw InvalidParams("whitney_cover: empty box");

  int start = -1;
  for (int j = 0; j <= 40 && start < 0; ++j) {
    bool aligned = true;
    for (int i = 0; i < d; ++i) {
      const double a = std::ldexp(box.lo[i], j), b = std::ldexp(box.hi[i], j);
      if (a != std::floor(a) || b != std::floor(b)) aligned = false;
    }
    if (aligned) start = j;
  }
  if (start < 0) throw InvalidParams("whitney_cover: box corners are not dyadic");
  if (max_level < start) throw InvalidParams("whitney_cover: max level coarser than the box");

  const double c1 = constants.c1;
  const double c2 = constants.c2 > 0.0 ? constants.c2 : 4.0 * std::sqrt(static_cast<double>(d));

  std::vector<DyadicCube> current;
  {
    std::array<std::int64_t, kMaxDim> lo{}, hi{};
    for (int i = 0; i < d; ++i) {
      lo[i] = static_cast<std::int64_t>(std::ldexp(box.lo[i], start));
      hi[i] = static_cast<std::int64_t>(std::ldexp(box.hi[i], start));
    }
    DyadicCube c;
    c.level = start;
    std::array<std::int64_t, kMaxDim> k = lo;
    for (;;) {
      c.k = k;
      current.push_back(c);
      int axis = d - 1;
      while (axis >= 0) {
        if (++k[axis] < hi[axis]) break;
        k[axis] = lo[axis];
        --axis;
      }
      if (axis < 0) break;
    }
  }

  std::vector<std::vector<WhitneyCube>> levels;
  double collar = 0.0;
  for (int j = start; j <= max_level; ++j) {
    std::vector<WhitneyCube> accepted;
    std::vector<DyadicCube> next;
    const double h = std::ldexp(1.0, -j);
    for (const auto& c : current) {
      const double dist = box_distance_to_singular_set(c.doubled(d), domain);
      if (dist >= c1 * h) {
        accepted.push_back({c, dist});
      } else if (j < max_level) {
        for (int child = 0; child < (1 << d); ++child) {
          DyadicCube ch;
          ch.level = j + 1;
          for (int i = 0; i < d; ++i) ch.k[i] = 2 * c.k[i] + ((child >> (d - 1 - i)) & 1);
          next.push_back(ch);
        }
      } else {
        collar += std::pow(h, d);
      }
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const WhitneyCube& a, const WhitneyCube& b) { return a.cube.k < b.cube.k; });
    levels.push_back(std::move(accepted));
    current = std::move(next);
  }

  WhitneyCover cover(domain, box, start, max_level, c1, c2, std::move(levels), collar);
  if (cover.total_count() == 0 || collar > 0.5 * box.volume()) {
    std::ostringstream msg;
    msg << "whitney_cover: max level " << max_level << " leaves uncovered volume " << collar;
    throw CoverageGap(msg.str(), collar);
  }
  return cover;
}

PartitionOfUnity::PartitionOfUnity(WhitneyCover cover) : cover_(std::move(cover)) {}

Jet PartitionOfUnity::bump_jet(const DyadicCube& c, const Point& x, int order) const {
  const int d = cover_.dim();
  const double scale = std::ldexp(1.0, c.level);
  Jet result = Jet::constant(d, order, 1.0);
  Derivs b;
  for (int i = 0; i < d; ++i) {
    const double t = x[i] * scale - static_cast<double>(c.k[i]);
    profile::bump(t, b);
    if (b[0] == 0.0) return Jet(d, order);
    if (b[0] == 1.0) continue;  // flat part: all derivatives vanish
    Jet z = Jet::variable(d, order, i, x[i]) * scale - static_cast<double>(c.k[i]);
    result = result * z.apply(b);
  }
  return result;
}

std::vector<std::pair<int, Jet>> PartitionOfUnity::bumps(const Point& x, int order) const {
  std::vector<std::pair<int, Jet>> out;
  const int d = cover_.dim();
  const Domain& domain = cover_.domain();
  double dist;
  if (std::holds_alternative<ModelDomain>(domain)) {
    double s = 0.0;
    const auto& m = std::get<ModelDomain>(domain);
    for (int i = m.ell; i < m.d; ++i) s += x[i] * x[i];
    dist = std::sqrt(s);
  } else {
    dist = std::numeric_limits<double>::infinity();
    for (const auto& v : std::get<PolygonSingularSet>(domain).vertices)
      dist = std::min(dist, std::hypot(x[0] - v[0], x[1] - v[1]));
  }
  if (!(dist > 0.0)) return out;

  // x in 2Q forces c1 2^-j <= dist(2Q,S) <= dist and dist <= (c2 + 2 sqrt d) 2^-j
  // for cubes below the start level.
  const int j0 = cover_.start_level();
  const int jmax = cover_.max_level();
  int jlo = static_cast<int>(std::floor(std::log2(cover_.c1() / dist)));
  int jhi = static_cast<int>(std::ceil(std::log2((cover_.c2() + 2.0 * std::sqrt(static_cast<double>(d))) / dist)));
  jlo = std::max(jlo, j0);
  jhi = std::min(jhi, jmax);

  auto scan_level = [&](int j) {
    const double scale = std::ldexp(1.0, j);
    std::array<std::int64_t, kMaxDim> lo{}, hi{};
    for (int i = 0; i < d; ++i) {
      const double t = x[i] * scale;
      lo[i] = static_cast<std::int64_t>(std::floor(t - 1.5)) + 1;
      hi[i] = static_cast<std::int64_t>(std::ceil(t + 0.5)) - 1;
    }
    DyadicCube c;
    c.level = j;
    std::array<std::int64_t, kMaxDim> k = lo;
    for (;;) {
      c.k = k;
      const int idx = cover_.find(c);
      if (idx >= 0) {
        Jet b = bump_jet(c, x, order);
        if (b.value() != 0.0) out.emplace_back(idx, b);
      }
      int axis = d - 1;
      while (axis >= 0) {
        if (++k[axis] <= hi[axis]) break;
        k[axis] = lo[axis];
        --axis;
      }
      if (axis < 0) break;
    }
  };
  if (jlo > j0) scan_level(j0);
  for (int j = jlo; j <= jhi; ++j) scan_level(j);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool PartitionOfUnity::try_evaluate(const Point& x, int order, std::vector<Term>& out) const {
  out.clear();
  auto b = bumps(x, order);
  const int d = cover_.dim();
  Jet sum(d, order);
  for (const auto& [idx, jet] : b) sum += jet;
  if (!(sum.value() >= kMinBumpSum)) return false;
  const Jet inv = reciprocal(sum);
  out.reserve(b.size());
  for (auto& [idx, jet] : b) out.push_back({idx, jet * inv});
  return true;
}

std::vector<PartitionOfUnity::Term> PartitionOfUnity::evaluate(const Point& x, int order) const {
  std::vector<Term> out;
  if (!try_evaluate(x, order, out)) throw OutsideCover("partition of unity evaluated outside the covered region");
  return out;
}

Jet PartitionOfUnity::jet(int index, const Point& x, int order) const {
  for (auto& t : evaluate(x, order))
    if (t.index == index) return t.jet;
  return Jet(cover_.dim(), order);
}

double PartitionOfUnity::value(int index, const Point& x) const {
  const auto& q = cover_.cubes().at(index).cube;
  for (int i = 0; i < cover_.dim(); ++i)
    if (profile::bump_value(x[i] * std::ldexp(1.0, q.level) - static_cast<double>(q.k[i])) == 0.0) return 0.0;
  return jet(index, x, 0).value();
}

double PartitionOfUnity::sum(const Point& x) const {
  double s = 0.0;
  for (const auto& t : evaluate(x, 0)) s += t.jet.value();
  return s;
}

int PartitionOfUnity::overlap(const Point& x) const { return static_cast<int>(bumps(x, 0).size()); }

}  // namespace klab::geometry

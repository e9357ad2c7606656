/**
 * @file norms.cpp
 */
#include "klab/norms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "klab/errors.hpp"
#include "klab/parallel.hpp"
#include "klab/wavelets.hpp"

namespace klab {

std::string SpaceParams::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["a"] = a;
  j["p"] = p;
  j["tau"] = tau;
  j["q"] = q;
  j["d"] = d;
  j["ell"] = ell;
  j["delta"] = delta;
  return j.dump();
}

double sigma(double tau, double q, int d) {
  if (!(tau > 0.0) || !(q > 0.0)) throw InvalidParams("sigma: need tau, q > 0");
  return d * (1.0 / std::min({1.0, tau, q}) - 1.0);
}

}  // namespace klab

namespace klab::norms {

namespace {

bool all_zero(const Jet& j) {
  for (double c : j.coefficients())
    if (c != 0.0) return false;
  return true;
}

void require_p(double p, const char* who) {
  if (!(p > 0.0) || std::isinf(p)) throw InvalidParams(std::string(who) + ": need 0 < p < inf");
}

void require_m(int m, const char* who) {
  if (m < 0 || m > kMaxOrder) throw Unsupported(std::string(who) + ": m outside 0..4");
}

// sum over m_lo <= |alpha| <= m_hi of |rho^{|alpha| - a} d^alpha u|^p; a = nullopt drops the weight
quadrature::Integrand derivative_integrand(const Field& u, int m_lo, int m_hi, std::optional<double> a, double p) {
  const int d = u.dim();
  std::vector<MultiIndex> alphas;
  for (const auto& al : multi_indices(d, m_hi))
    if (total_degree(al) >= m_lo) alphas.push_back(al);
  return [jet = u.jet, domain = u.domain, alphas, m_hi, a, p](const Point& x) {
    const Jet j = jet(x, m_hi);
    if (all_zero(j)) return 0.0;
    const double rho = a ? geometry::regularized_distance(x, domain) : 1.0;
    double s = 0.0;
    for (const auto& al : alphas) {
      double v = std::abs(j.partial(al));
      if (v == 0.0) continue;
      if (a) v *= std::pow(rho, total_degree(al) - *a);
      s += p == 2.0 ? v * v : std::pow(v, p);
    }
    return s;
  };
}

NormValue graded_norm(std::string kind, const Field& u, const quadrature::Integrand& f, double p,
                      const NormOptions& opt) {
  const auto sums = quadrature::integrate_graded(u, f, opt.quad);
  std::vector<int> levels;
  std::vector<double> ladder;
  for (int k = opt.quad.min_ladder; k <= opt.quad.max_level; ++k) {
    levels.push_back(k);
    ladder.push_back(sums.up_to(k));
  }
  return norm_from_power_ladder(std::move(kind), levels, ladder, p, opt.quad.nodes, opt.oracle_finite);
}

bool doubled_meets_support(const geometry::DyadicCube& q, const Field& u) {
  const geometry::Box b = q.doubled(u.dim());
  double s = 0.0;
  for (int i = 0; i < u.dim(); ++i) {
    double g = 0.0;
    if (u.center[i] < b.lo[i]) g = b.lo[i] - u.center[i];
    else if (u.center[i] > b.hi[i]) g = u.center[i] - b.hi[i];
    s += g * g;
  }
  return s <= u.radius * u.radius;
}

// p-th powers of the pieces, grouped by Whitney level, as a norm ladder.
NormValue localized_norm(std::string kind, const Field& u, double p,
                         const std::shared_ptr<const geometry::PartitionOfUnity>& pou,
                         const std::function<double(const Field&, const geometry::DyadicCube&)>& piece_power,
                         const NormOptions& opt, std::string note = {}) {
  const auto& cover = pou->cover();
  const auto& cubes = cover.cubes();
  std::vector<int> active;
  for (std::size_t i = 0; i < cubes.size(); ++i)
    if (doubled_meets_support(cubes[i].cube, u)) active.push_back(static_cast<int>(i));
  std::vector<double> powers(active.size(), 0.0);
  parallel_for(active.size(), [&](std::size_t n) {
    const int idx = active[n];
    powers[n] = piece_power(times_partition_piece(u, pou, idx), cubes[idx].cube);
  });
  const int j0 = cover.start_level();
  std::vector<double> per_level(cover.max_level() - j0 + 1, 0.0);
  for (std::size_t n = 0; n < active.size(); ++n) per_level[cubes[active[n]].cube.level - j0] += powers[n];
  std::vector<int> levels;
  std::vector<double> ladder;
  double acc = 0.0;
  for (std::size_t j = 0; j < per_level.size(); ++j) {
    acc += per_level[j];
    levels.push_back(j0 + static_cast<int>(j));
    ladder.push_back(acc);
  }
  NormValue n = norm_from_power_ladder(std::move(kind), levels, ladder, p, opt.piece_nodes, opt.oracle_finite);
  if (n.tail_share > wavelets::kMaxTailShare) {
    n.classification = Classification::Inconclusive;
    note += note.empty() ? "" : "; ";
    note += "level tail share above 10%";
  } else if (n.classification != Classification::Divergent && n.tail_share <= wavelets::kMaxTailShare &&
             n.classification == Classification::Inconclusive && n.residual < wavelets::kMaxTailShare) {
    // piece ladders are short; a small tail share is the convergence criterion
    n.classification = Classification::Finite;
  }
  n.note = std::move(note);
  return n;
}

}  // namespace

NormValue weighted_lp_norm(const Field& u, double w, double p, const NormOptions& opt) {
  require_p(p, "weighted_lp_norm");
  auto f = [jet = u.jet, domain = u.domain, w, p](const Point& x) {
    const double v = jet(x, 0).value();
    if (v == 0.0) return 0.0;
    const double r = std::abs(std::pow(geometry::regularized_distance(x, domain), w) * v);
    return p == 2.0 ? r * r : std::pow(r, p);
  };
  return graded_norm("weighted_lp", u, f, p, opt);
}

NormValue kondratiev_norm(const Field& u, int m, double a, double p, const NormOptions& opt) {
  require_p(p, "kondratiev_norm");
  require_m(m, "kondratiev_norm");
  return graded_norm("kondratiev", u, derivative_integrand(u, 0, m, a, p), p, opt);
}

NormValue sobolev_norm(const Field& u, int m, double p, const NormOptions& opt) {
  require_p(p, "sobolev_norm");
  require_m(m, "sobolev_norm");
  return graded_norm("sobolev", u, derivative_integrand(u, 0, m, std::nullopt, p), p, opt);
}

NormValue sobolev_top_seminorm(const Field& u, int m, double p, const NormOptions& opt) {
  require_p(p, "sobolev_top_seminorm");
  require_m(m, "sobolev_top_seminorm");
  return graded_norm("sobolev_top", u, derivative_integrand(u, m, m, std::nullopt, p), p, opt);
}

NormValue f_norm(const Field& u, int m, double tau, const NormOptions& opt) {
  require_p(tau, "f_norm");
  if (tau > 1.0) {
    NormValue n = sobolev_norm(u, m, tau, opt);
    n.kind = "f_sobolev";
    return n;
  }
  const auto system = wavelets::build_wavelet_system(m);
  const auto coeffs = wavelets::wavelet_coefficients(u, system, opt.wavelet_level, quadrature::support_box(u));
  NormValue n = wavelets::f_sequence_norm(coeffs, m, tau);
  n.kind = "f_wavelet";
  return n;
}

NormValue rloc_norm_weighted(const Field& u, int m, double tau, const NormOptions& opt) {
  return sum_of_norms("rloc_weighted", f_norm(u, m, tau, opt), weighted_lp_norm(u, -m, tau, opt));
}

NormValue rloc_norm_localized(const Field& u, int m, double tau,
                              std::shared_ptr<const geometry::PartitionOfUnity> pou, const NormOptions& opt) {
  require_p(tau, "rloc_norm_localized");
  require_m(m, "rloc_norm_localized");
  const int d = u.dim();
  if (tau > 1.0) {
    auto power = [&](const Field& piece, const geometry::DyadicCube& q) {
      return quadrature::integrate_box(q.doubled(d), derivative_integrand(piece, 0, m, std::nullopt, tau),
                                       opt.piece_cells, opt.piece_nodes);
    };
    return localized_norm("rloc_localized", u, tau, pou, power, opt);
  }
  const auto system = wavelets::build_wavelet_system(m);
  int skipped = 0;
  std::mutex mu;
  auto power = [&](const Field& piece, const geometry::DyadicCube& q) {
    const int J = q.level + 1 + opt.wavelet_relative_level;
    if (J > wavelets::kMaxLevel) {
      std::lock_guard<std::mutex> lock(mu);
      ++skipped;
      return 0.0;
    }
    const auto coeffs = wavelets::wavelet_coefficients(piece, system, J, q.doubled(d));
    return std::pow(wavelets::f_sequence_norm(coeffs, m, tau).value, tau);
  };
  NormValue n = localized_norm("rloc_localized", u, tau, pou, power, opt);
  if (skipped > 0) {
    n.note += (n.note.empty() ? "" : "; ") + std::to_string(skipped) + " pieces beyond the wavelet depth omitted";
    n.classification = Classification::Inconclusive;
  }
  return n;
}

NormValue kondratiev_localized(const Field& u, int m, double a, double p,
                               std::shared_ptr<const geometry::PartitionOfUnity> pou, const NormOptions& opt) {
  require_p(p, "kondratiev_localized");
  require_m(m, "kondratiev_localized");
  const int d = u.dim();
  auto power = [&](const Field& piece, const geometry::DyadicCube& q) {
    return quadrature::integrate_box(q.doubled(d), derivative_integrand(piece, 0, m, a, p), opt.piece_cells,
                                     opt.piece_nodes);
  };
  return localized_norm("kondratiev_localized", u, p, pou, power, opt);
}

NormValue kondratiev_sharp_norm(const Field& u, int m, double a, double p, const NormOptions& opt) {
  require_p(p, "kondratiev_sharp_norm");
  require_m(m, "kondratiev_sharp_norm");
  const Field v = times_rho_power(u, m - a);
  NormValue total = weighted_lp_norm(u, -a, p, opt);
  for (const auto& al : multi_indices_of_degree(u.dim(), m)) {
    auto f = [jet = v.jet, al, m, p](const Point& x) {
      const double g = std::abs(jet(x, m).partial(al));
      return p == 2.0 ? g * g : std::pow(g, p);
    };
    total = sum_of_norms("kondratiev_sharp", total, graded_norm("derivative", v, f, p, opt));
  }
  total.kind = "kondratiev_sharp";
  return total;
}

std::shared_ptr<const geometry::PartitionOfUnity> partition_for(const Field& u, int max_level) {
  static std::mutex mu;
  static std::map<const geometry::WhitneyCover*, std::shared_ptr<const geometry::PartitionOfUnity>> cache;
  const auto cover = quadrature::cover_for(u, max_level);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cover.get());
  if (it != cache.end()) return it->second;
  auto pou = std::make_shared<const geometry::PartitionOfUnity>(*cover);
  cache.emplace(cover.get(), pou);
  return pou;
}

Classification classify_radial_integral(double e, double g) {
  if (e > -1.0) return Classification::Finite;
  if (e == -1.0 && g < -1.0) return Classification::Finite;
  return Classification::Divergent;
}

testfns::TestFunction multiply_by_rho_power(const testfns::TestFunction& u, double gamma) {
  testfns::TestFunction v = u;
  v.beta += gamma;
  return v;
}

std::string csv_header() { return "norm_kind,m,a,p,tau,beta,lambda,value,classification"; }

std::string csv_row(const NormValue& n, const SpaceParams& params, double beta, double lambda) {
  std::ostringstream s;
  s.precision(17);
  s << n.kind << "," << params.m << "," << params.a << "," << params.p << "," << params.tau << "," << beta << ","
    << lambda << ",";
  if (std::isfinite(n.value)) s << n.value;
  else s << "inf";
  s << "," << quadrature::to_string(n.classification);
  return s.str();
}

}  // namespace klab::norms

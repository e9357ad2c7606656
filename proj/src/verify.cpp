/**
 * @file verify.cpp
 */
#include "klab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "klab/embeddings.hpp"
#include "klab/errors.hpp"
#include "klab/radial.hpp"

namespace klab::verify {

namespace {

using nlohmann::ordered_json;
using testfns::TestFunction;

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return fmt(v);
}

ordered_json params(std::initializer_list<std::pair<const char*, double>> kv) {
  ordered_json j;
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

void require_family(const Family& family) {
  if (family.empty()) throw EmptyFamily("verify: empty family");
}

norms::NormOptions with_oracle(norms::NormOptions opt, bool finite) {
  opt.oracle_finite = finite;
  return opt;
}

using Exclusion = std::function<std::string(const TestFunction&)>;
using Evaluation = std::function<std::pair<NormValue, NormValue>(const TestFunction&)>;

void finalize(RatioReport& r) {
  r.ratios.clear();
  r.unresolved = 0;
  for (const auto& row : r.rows) {
    if (!row.included) continue;
    if (row.numerator_class != "Finite" || row.denominator_class != "Finite") {
      ++r.unresolved;
      continue;
    }
    r.ratios.push_back(row.ratio);
  }
  r.passed = false;
  if (r.ratios.empty()) return;
  const auto [lo, hi] = std::minmax_element(r.ratios.begin(), r.ratios.end());
  r.min_ratio = *lo;
  r.max_ratio = *hi;
  r.spread = r.max_ratio / r.min_ratio;
  bool finite = true;
  for (double x : r.ratios)
    if (!std::isfinite(x) || !(x > 0.0)) finite = false;
  r.passed = finite && !r.critical && r.spread < r.spread_bound;
  if (r.bracket && (r.min_ratio < r.bracket->first || r.max_ratio > r.bracket->second)) r.passed = false;
}

void append(std::string& note, const std::string& s) {
  if (note.find(s) != std::string::npos) return;
  if (!note.empty()) note += "; ";
  note += s;
}

RatioReport run_ratio(std::string experiment, ordered_json par, std::string num_kind, std::string den_kind,
                      const Family& family, double bound, const Exclusion& exclude, const Evaluation& eval) {
  require_family(family);
  RatioReport r;
  r.experiment = std::move(experiment);
  r.params_json = par.dump();
  r.numerator_kind = std::move(num_kind);
  r.denominator_kind = std::move(den_kind);
  r.spread_bound = bound;
  for (const auto& u : family) {
    RatioRow row;
    row.beta = u.beta;
    row.lambda = u.lambda;
    const std::string why = exclude(u);
    if (!why.empty()) {
      row.included = false;
      row.note = why;
      r.rows.push_back(row);
      continue;
    }
    const auto [num, den] = eval(u);
    row.numerator = num.value;
    row.denominator = den.value;
    row.ratio = num.value / den.value;
    row.numerator_class = quadrature::to_string(num.classification);
    row.denominator_class = quadrature::to_string(den.classification);
    row.note = csv_safe(num.note.empty() ? den.note : num.note);
    if (row.numerator_class != "Finite" || row.denominator_class != "Finite") append(row.note, "not resolved at this depth; excluded from the ratios");
    r.rows.push_back(row);
  }
  finalize(r);
  if (r.ratios.empty()) append(r.note, "no admissible member");
  return r;
}

std::string k_exclusion(const TestFunction& u, int m, double a, double p) {
  const auto v = testfns::kondratiev_membership(u, m, a, p);
  if (!v.determined) return "K membership undetermined";
  return v.member ? "" : "outside K by exponent rule";
}

std::string f_exclusion(const TestFunction& u, int m, double p) {
  const auto v = testfns::f_space_membership_radial(u.beta, u.lambda, m, p, u.domain.ell, u.domain.d);
  if (!v.determined) return "F membership undetermined";
  return v.member ? "" : "outside F by radial rule";
}

// u in F^{m,rloc}_{p,2}: F^m_{p,2} and rho^-m u in L_p.
std::string rloc_exclusion(const TestFunction& u, int m, double p) {
  const std::string f = f_exclusion(u, m, p);
  if (!f.empty()) return f;
  return k_exclusion(u, 0, m, p).empty() ? "" : "rho^-m u outside L_p";
}

struct ParsedCsv {
  std::map<std::string, std::string> meta;
  std::vector<std::vector<std::string>> rows;
};

ParsedCsv parse_csv(const std::string& csv) {
  ParsedCsv out;
  std::istringstream in(csv);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      out.meta[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    if (!header) {
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    out.rows.push_back(std::move(cells));
  }
  return out;
}

double parse_double(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidParams("bad number in CSV: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw InvalidParams("bad number in CSV: " + s);
  }
}

std::string meta_or(const ParsedCsv& c, const std::string& key, std::string fallback = {}) {
  const auto it = c.meta.find(key);
  return it == c.meta.end() ? fallback : it->second;
}

const std::string& meta(const ParsedCsv& c, const std::string& key) {
  const auto it = c.meta.find(key);
  if (it == c.meta.end()) throw InvalidParams("CSV metadata missing: " + key);
  return it->second;
}

}  // namespace

RatioReport RatioReport::from_csv(const std::string& csv) {
  const auto c = parse_csv(csv);
  if (meta(c, "kind") != "ratio") throw InvalidParams("not a ratio report");
  RatioReport r;
  r.experiment = meta(c, "experiment");
  r.params_json = meta(c, "params");
  r.numerator_kind = meta(c, "numerator");
  r.denominator_kind = meta(c, "denominator");
  r.spread_bound = parse_double(meta(c, "spread_bound"));
  const std::string br = meta_or(c, "bracket");
  if (!br.empty()) {
    const auto colon = br.find(':');
    if (colon == std::string::npos) throw InvalidParams("bad bracket in CSV");
    r.bracket = std::pair{parse_double(br.substr(0, colon)), parse_double(br.substr(colon + 1))};
  }
  r.critical = meta_or(c, "critical") == "1";
  r.note = meta_or(c, "note");
  for (const auto& cells : c.rows) {
    if (cells.size() != 10) throw InvalidParams("ratio CSV row must have 10 columns");
    RatioRow row;
    row.beta = parse_double(cells[0]);
    row.lambda = parse_double(cells[1]);
    row.included = cells[2] == "1";
    row.numerator = parse_double(cells[3]);
    row.denominator = parse_double(cells[4]);
    row.ratio = parse_double(cells[5]);
    row.numerator_class = cells[6];
    row.denominator_class = cells[7];
    row.auxiliary = parse_double(cells[8]);
    row.note = cells[9];
    r.rows.push_back(row);
  }
  finalize(r);
  return r;
}

DivergenceReport DivergenceReport::from_csv(const std::string& csv) {
  const auto c = parse_csv(csv);
  if (meta(c, "kind") != "divergence") throw InvalidParams("not a divergence report");
  DivergenceReport r;
  r.experiment = meta(c, "experiment");
  r.params_json = meta(c, "params");
  r.exponent = parse_double(meta(c, "exponent"));
  r.predicted_exponent = parse_double(meta(c, "predicted_exponent"));
  r.residual = parse_double(meta(c, "residual"));
  r.predicted_divergent = meta(c, "predicted_divergent") == "1";
  r.k_cauchy = meta(c, "k_cauchy") == "1";
  r.k_gamma = parse_double(meta(c, "k_gamma"));
  r.k_value = parse_double(meta(c, "k_value"));
  r.passed = meta(c, "passed") == "1";
  r.note = meta_or(c, "note");
  for (const auto& cells : c.rows) {
    if (cells.size() != 2) throw InvalidParams("divergence CSV row must have 2 columns");
    r.ladder.emplace_back(parse_double(cells[0]), parse_double(cells[1]));
  }
  return r;
}

ScalingReport ScalingReport::from_csv(const std::string& csv) {
  const auto c = parse_csv(csv);
  if (meta(c, "kind") != "scaling") throw InvalidParams("not a scaling report");
  if (c.rows.size() != 1 || c.rows[0].size() != 9) throw InvalidParams("scaling CSV must have one 9-column row");
  const auto& v = c.rows[0];
  ScalingReport r;
  r.params_json = meta(c, "params");
  r.k = static_cast<int>(parse_double(v[0]));
  r.original = parse_double(v[1]);
  r.dilated = parse_double(v[2]);
  r.predicted_factor = parse_double(v[3]);
  r.observed_factor = parse_double(v[4]);
  r.relative_error = parse_double(v[5]);
  r.full_ratio = parse_double(v[6]);
  r.full_bracket = {parse_double(v[7]), parse_double(v[8])};
  r.passed = scaling_passed(r);
  return r;
}

std::string summarize(const std::string& csv) {
  const auto c = parse_csv(csv);
  const std::string kind = meta(c, "kind");
  if (kind == "ratio") return RatioReport::from_csv(csv).to_json();
  if (kind == "divergence") return DivergenceReport::from_csv(csv).to_json();
  if (kind == "scaling") return ScalingReport::from_csv(csv).to_json();
  throw InvalidParams("unknown report kind: " + kind);
}

Family make_family(const std::vector<double>& betas, const std::vector<double>& lambdas,
                   geometry::ModelDomain domain, double R) {
  Family f;
  for (double l : lambdas)
    for (double b : betas) f.push_back(testfns::make_test_function(b, l, R, domain));
  return f;
}

Family default_family(geometry::ModelDomain domain) {
  return make_family({0.2, 0.5, 0.8, 1.2, 1.6, 2.0, 2.5}, {0.0, -0.7}, domain);
}

std::string RatioReport::to_csv() const {
  std::ostringstream s;
  s << "# kind=ratio\n";
  s << "# experiment=" << experiment << "\n";
  s << "# params=" << params_json << "\n";
  s << "# numerator=" << numerator_kind << "\n";
  s << "# denominator=" << denominator_kind << "\n";
  s << "# spread_bound=" << fmt(spread_bound) << "\n";
  if (bracket) s << "# bracket=" << fmt(bracket->first) << ":" << fmt(bracket->second) << "\n";
  if (critical) s << "# critical=1\n";
  if (!note.empty()) s << "# note=" << csv_safe(note) << "\n";
  s << "beta,lambda,included,numerator,denominator,ratio,numerator_class,denominator_class,auxiliary,note\n";
  for (const auto& r : rows) {
    s << fmt(r.beta) << "," << fmt(r.lambda) << "," << (r.included ? 1 : 0) << "," << fmt(r.numerator) << ","
      << fmt(r.denominator) << "," << fmt(r.ratio) << "," << r.numerator_class << "," << r.denominator_class << ","
      << fmt(r.auxiliary) << "," << csv_safe(r.note) << "\n";
  }
  return s.str();
}

std::string RatioReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["params"] = ordered_json::parse(params_json.empty() ? "{}" : params_json);
  j["pass"] = passed;
  ordered_json st;
  st["numerator"] = numerator_kind;
  st["denominator"] = denominator_kind;
  st["members"] = rows.size();
  st["included"] = ratios.size();
  st["unresolved"] = unresolved;
  st["min_ratio"] = number(min_ratio);
  st["max_ratio"] = number(max_ratio);
  st["spread"] = number(spread);
  st["spread_bound"] = spread_bound;
  if (bracket) st["bracket"] = {number(bracket->first), number(bracket->second)};
  st["critical"] = critical;
  if (!note.empty()) st["note"] = note;
  j["statistics"] = st;
  return j.dump();
}

std::string DivergenceReport::to_csv() const {
  std::ostringstream s;
  s << "# kind=divergence\n";
  s << "# experiment=" << experiment << "\n";
  s << "# params=" << params_json << "\n";
  s << "# exponent=" << fmt(exponent) << "\n";
  s << "# predicted_exponent=" << fmt(predicted_exponent) << "\n";
  s << "# residual=" << fmt(residual) << "\n";
  s << "# predicted_divergent=" << (predicted_divergent ? 1 : 0) << "\n";
  s << "# k_cauchy=" << (k_cauchy ? 1 : 0) << "\n";
  s << "# k_gamma=" << fmt(k_gamma) << "\n";
  s << "# k_value=" << fmt(k_value) << "\n";
  s << "# passed=" << (passed ? 1 : 0) << "\n";
  if (!note.empty()) s << "# note=" << csv_safe(note) << "\n";
  s << "log_inv_eps,value\n";
  for (const auto& [t, v] : ladder) s << fmt(t) << "," << fmt(v) << "\n";
  return s.str();
}

std::string DivergenceReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment;
  j["params"] = ordered_json::parse(params_json.empty() ? "{}" : params_json);
  j["pass"] = passed;
  ordered_json st;
  st["exponent"] = number(exponent);
  st["predicted_exponent"] = predicted_exponent;
  st["residual"] = number(residual);
  st["predicted_divergent"] = predicted_divergent;
  st["k_cauchy"] = k_cauchy;
  st["k_gamma"] = number(k_gamma);
  st["k_value"] = number(k_value);
  st["shells"] = ladder.size();
  if (!note.empty()) st["note"] = note;
  j["statistics"] = st;
  return j.dump();
}

std::string ScalingReport::to_csv() const {
  std::ostringstream s;
  s << "# kind=scaling\n";
  s << "# experiment=scaling\n";
  s << "# params=" << params_json << "\n";
  s << "# passed=" << (passed ? 1 : 0) << "\n";
  s << "k,original,dilated,predicted_factor,observed_factor,relative_error,full_ratio,full_lo,full_hi\n";
  s << k << "," << fmt(original) << "," << fmt(dilated) << "," << fmt(predicted_factor) << "," << fmt(observed_factor)
    << "," << fmt(relative_error) << "," << fmt(full_ratio) << "," << fmt(full_bracket.first) << ","
    << fmt(full_bracket.second) << "\n";
  return s.str();
}

std::string ScalingReport::to_json() const {
  ordered_json j;
  j["experiment"] = "scaling";
  j["params"] = ordered_json::parse(params_json.empty() ? "{}" : params_json);
  j["pass"] = passed;
  j["statistics"] = {{"k", k},
                     {"predicted_factor", number(predicted_factor)},
                     {"observed_factor", number(observed_factor)},
                     {"relative_error", number(relative_error)},
                     {"full_ratio", number(full_ratio)},
                     {"full_bracket", {number(full_bracket.first), number(full_bracket.second)}}};
  return j.dump();
}

RatioReport check_norm_equivalence_Kmm(const Family& family, int m, double p, const norms::NormOptions& opt) {
  auto exclude = [&](const TestFunction& u) {
    const std::string k = k_exclusion(u, m, m, p);
    return k.empty() ? rloc_exclusion(u, m, p) : k;
  };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const auto o = with_oracle(opt, true);
    return std::pair{norms::kondratiev_norm(f, m, m, p, o), norms::rloc_norm_weighted(f, m, p, o)};
  };
  return run_ratio("kmm-equivalence", params({{"m", m}, {"a", m}, {"p", p}}), "kondratiev", "rloc_weighted", family,
                   kSameIntegrabilitySpread, exclude, eval);
}

RatioReport check_sharp_norm(const Family& family, int m, double a, double p, const norms::NormOptions& opt) {
  auto exclude = [&](const TestFunction& u) { return k_exclusion(u, m, a, p); };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const auto o = with_oracle(opt, true);
    return std::pair{norms::kondratiev_sharp_norm(f, m, a, p, o), norms::kondratiev_norm(f, m, a, p, o)};
  };
  return run_ratio("sharp-norm", params({{"m", m}, {"a", a}, {"p", p}}), "kondratiev_sharp", "kondratiev", family,
                   kSameIntegrabilitySpread, exclude, eval);
}

RatioReport check_localization(const Family& family, int m, double a, double p, const norms::NormOptions& opt) {
  auto exclude = [&](const TestFunction& u) { return k_exclusion(u, m, a, p); };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const auto o = with_oracle(opt, true);
    NormValue global = norms::kondratiev_norm(f, m, a, p, o);
    NormValue local = norms::kondratiev_localized(f, m, a, p, norms::partition_for(f, opt.pou_max_level), o);
    // ratio of p-th powers
    global.value = std::pow(global.value, p);
    local.value = std::pow(local.value, p);
    return std::pair{global, local};
  };
  auto r = run_ratio("localization", params({{"m", m}, {"a", a}, {"p", p}, {"pou_max_level", opt.pou_max_level}}),
                     "kondratiev^p", "kondratiev_localized^p", family, kSameIntegrabilitySpread, exclude, eval);
  return r;
}

RatioReport check_rho_power_isomorphism(const Family& family, int m, double a, double a2, double p,
                                        const norms::NormOptions& opt) {
  auto exclude = [&](const TestFunction& u) { return k_exclusion(u, m, a, p); };
  auto eval = [&](const TestFunction& u) {
    const auto o = with_oracle(opt, true);
    const Field f = from_test_function(u);
    const Field g = from_test_function(norms::multiply_by_rho_power(u, a2 - a));
    return std::pair{norms::kondratiev_norm(g, m, a2, p, o), norms::kondratiev_norm(f, m, a, p, o)};
  };
  return run_ratio("rho-power", params({{"m", m}, {"a", a}, {"a2", a2}, {"p", p}}), "kondratiev(a2)", "kondratiev(a)",
                   family, kSameIntegrabilitySpread, exclude, eval);
}

RatioReport check_embedding_ratio(const SpaceParams& s, const Family& family, const norms::NormOptions& opt) {
  require_family(family);
  const auto verdict = embeddings::decide_embedding(s);
  if (verdict.outcome != embeddings::Outcome::Holds)
    throw InvalidParams("check_embedding_ratio: embedding does not hold (" + verdict.trigger + ")");
  for (const auto& u : family)
    if (u.domain.d != s.d || u.domain.ell != static_cast<int>(s.delta))
      throw InvalidParams("check_embedding_ratio: family domain does not match the parameters");
  auto exclude = [&](const TestFunction& u) { return k_exclusion(u, s.m, s.a, s.p); };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const auto o = with_oracle(opt, true);
    return std::pair{norms::rloc_norm_weighted(f, s.m, s.tau, o), norms::kondratiev_norm(f, s.m, s.a, s.p, o)};
  };
  auto r = run_ratio("embedding-ratio", ordered_json::parse(s.to_json()), "rloc_weighted(tau)", "kondratiev(p)",
                     family, kCrossIntegrabilitySpread, exclude, eval);
  for (const auto& row : r.rows)
    if (row.included && row.numerator_class == "Divergent") r.critical = true;
  if (r.critical) {
    r.passed = false;
    append(r.note, "numerator divergent under a Holds verdict");
  }
  return r;
}

DivergenceReport check_counterexample_divergence(const SpaceParams& s, double lambda, int shells) {
  if (s.ell != 0 || s.delta != 0.0) throw Unsupported("counterexample: isolated singular point only (l = 0)");
  if (!(s.tau > 0.0) || !(s.p > 1.0)) throw InvalidParams("counterexample: need tau > 0, p > 1");
  DivergenceReport r;
  r.experiment = "counterexample";
  ordered_json par = ordered_json::parse(s.to_json());
  par["lambda"] = lambda;
  r.params_json = par.dump();
  const double beta = s.m - s.d / s.tau;
  const auto u = testfns::make_test_function(beta, lambda, 0.25, geometry::ModelDomain{s.d, 0});
  const auto weighted = radial::shell_ladder(u, {0, 0, static_cast<double>(s.m), s.tau}, shells);
  const auto k = radial::shell_ladder(u, {0, s.m, s.a, s.p}, shells);
  for (std::size_t i = 0; i < weighted.t.size(); ++i) r.ladder.emplace_back(weighted.t[i], weighted.power[i]);
  const auto fit = radial::fit_growth(weighted);
  const auto kfit = radial::fit_growth(k);
  r.exponent = fit.gamma;
  r.residual = fit.residual;
  r.predicted_exponent = 1.0 + lambda * s.tau;
  r.predicted_divergent = lambda * s.tau >= -1.0;
  r.k_gamma = kfit.gamma;
  r.k_value = std::pow(k.power.back(), 1.0 / s.p);
  r.k_cauchy = radial::is_cauchy(k, s.p) && kfit.gamma < kMaxConvergentGamma;
  if (r.predicted_divergent) {
    r.passed = std::abs(r.exponent - r.predicted_exponent) <= kExponentTolerance && r.residual < kMaxFitResidual &&
               r.k_cauchy;
    if (r.residual >= kMaxFitResidual) r.note = "fit residual above 10%: inconclusive";
  } else {
    const bool weighted_finite = radial::is_cauchy(weighted, s.tau) && fit.gamma < kMaxConvergentGamma;
    r.passed = weighted_finite && r.k_cauchy;
    r.note = "not a counterexample: both norms finite";
  }
  return r;
}

RatioReport check_derivative_mapping(const Family& family, int m, const MultiIndex& alpha, double p,
                                     const norms::NormOptions& opt) {
  const int order = total_degree(alpha);
  if (m - order < 1 && order != 0) throw InvalidParams("check_derivative_mapping: need m - |alpha| >= 1");
  auto exclude = [&](const TestFunction& u) { return rloc_exclusion(u, m, p); };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const auto o = with_oracle(opt, true);
    return std::pair{norms::rloc_norm_weighted(derivative(f, alpha), m - order, p, o),
                     norms::rloc_norm_weighted(f, m, p, o)};
  };
  return run_ratio("derivative-mapping",
                   params({{"m", m}, {"alpha0", alpha[0]}, {"alpha1", alpha[1]}, {"alpha2", alpha[2]}, {"p", p}}),
                   "rloc_weighted(d^alpha u, m - |alpha|)", "rloc_weighted(u, m)", family, kCrossIntegrabilitySpread,
                   exclude, eval);
}

RatioReport check_diffeo_invariance(const Family& family, const Diffeomorphism& phi, int m, double p,
                                    const norms::NormOptions& opt) {
  require_family(family);
  std::vector<double> aux;
  auto exclude = [&](const TestFunction& u) { return rloc_exclusion(u, m, p); };
  auto eval = [&](const TestFunction& u) {
    const Field f = from_test_function(u);
    const Field g = pull_back(f, phi);
    const auto o = with_oracle(opt, true);
    aux.push_back(norms::weighted_lp_norm(g, -m, p, o).value / norms::weighted_lp_norm(f, -m, p, o).value);
    return std::pair{norms::rloc_norm_weighted(g, m, p, o), norms::rloc_norm_weighted(f, m, p, o)};
  };
  ordered_json par = params({{"m", m}, {"p", p}});
  par["diffeomorphism"] = phi.name;
  auto r = run_ratio("diffeo-invariance", par, "rloc_weighted(u o phi)", "rloc_weighted(u)", family,
                     kSameIntegrabilitySpread, exclude, eval);
  std::size_t n = 0;
  for (auto& row : r.rows)
    if (row.included) row.auxiliary = aux[n++];
  if (phi.linear || m <= 1) {
    const double d = phi.dim;
    const double count = std::pow(static_cast<double>(multi_indices(phi.dim, m).size()), 1.0 / p);
    const double up = std::pow(phi.det_min, -1.0 / p) * std::pow(d * std::max(1.0, phi.sigma_max), m) * count;
    const double down = std::pow(phi.det_max, 1.0 / p) * std::pow(d * std::max(1.0, 1.0 / phi.sigma_min), m) * count;
    r.bracket = std::pair{1.0 / down, up};
    finalize(r);
  } else {
    r.note = "no stored bracket for second derivatives of a nonlinear map";
  }
  return r;
}

RatioReport check_cone_localization(const Family& family, int m, double a, double p, const norms::NormOptions& opt) {
  require_family(family);
  for (const auto& u : family)
    if (u.domain.d != 2 || u.domain.ell != 0) throw Unsupported("check_cone_localization: planar point singularity only");
  const int j_max = opt.quad.max_level + 1;
  auto in_sector = [](const Point& x) { return x[0] > 0.0 && x[1] > 0.0; };
  // phi_j = b(log2|x| + j + 1/2) / sum_i b(log2|x| + i + 1/2)
  auto annulus_jet = [](const Point& x, int j, int order) {
    const Jet x0 = Jet::variable(2, order, 0, x[0]);
    const Jet x1 = Jet::variable(2, order, 1, x[1]);
    const Jet s = log(x0 * x0 + x1 * x1) * (0.5 / std::numbers::ln2);
    const double s0 = s.value();
    std::array<double, kMaxOrder + 1> out{};
    Jet num(2, order), den(2, order);
    for (int i = static_cast<int>(std::floor(-s0)) - 2; i <= static_cast<int>(std::ceil(-s0)) + 2; ++i) {
      geometry::profile::bump(s0 + i + 0.5, out);
      const Jet b = (s + (i + 0.5)).apply(std::span<const double>(out.data(), static_cast<std::size_t>(order) + 1));
      den += b;
      if (i == j) num = b;
    }
    return num * reciprocal(den);
  };
  auto exclude = [&](const TestFunction& u) { return k_exclusion(u, m, a, p); };
  auto eval = [&](const TestFunction& u) {
    const auto o = with_oracle(opt, true);
    const Field f = from_test_function(u);
    Field sector = f;
    sector.jet = [inner = f.jet, in_sector](const Point& x, int order) {
      return in_sector(x) ? inner(x, order) : Jet(2, order);
    };
    NormValue global = norms::kondratiev_norm(sector, m, a, p, o);
    NormValue local = global;
    local.kind = "kondratiev_annuli";
    std::vector<double> powers;
    for (int j = 0; j <= j_max; ++j) {
      Field piece = f;
      piece.jet = [inner = f.jet, in_sector, annulus_jet, j](const Point& x, int order) {
        if (!in_sector(x)) return Jet(2, order);
        const Jet v = inner(x, order);
        for (double c : v.coefficients())
          if (c != 0.0) return v * annulus_jet(x, j, order);
        return v;
      };
      powers.push_back(std::pow(norms::kondratiev_norm(piece, m, a, p, o).value, p));
    }
    double total = 0.0;
    for (double x : powers) total += x;
    double tail = 0.0;
    for (std::size_t i = powers.size() - 3; i < powers.size(); ++i) tail += powers[i];
    global.value = std::pow(global.value, p);
    local.value = total;
    local.tail_share = total > 0.0 ? tail / total : 0.0;
    local.classification = std::isfinite(total) && local.tail_share <= kMaxTailShare ? Classification::Finite
                                                                                    : Classification::Inconclusive;
    return std::pair{global, local};
  };
  return run_ratio("cone-localization", params({{"m", m}, {"a", a}, {"p", p}}), "kondratiev_sector^p",
                   "sum_j kondratiev(phi_j u)^p", family, kSameIntegrabilitySpread, exclude, eval);
}

bool scaling_passed(const ScalingReport& r) {
  return r.relative_error <= kScalingTolerance && r.full_ratio >= r.full_bracket.first * (1.0 - 1e-12) &&
         r.full_ratio <= r.full_bracket.second * (1.0 + 1e-12);
}

ScalingReport check_scaling_homogeneity(const TestFunction& u, int m, double p, int k, const norms::NormOptions& opt) {
  if (k < 0) throw InvalidParams("check_scaling_homogeneity: need k >= 0");
  const int d = u.domain.d;
  ScalingReport r;
  r.k = k;
  r.params_json = params({{"m", m}, {"p", p}, {"d", d}, {"k", k}, {"beta", u.beta}, {"lambda", u.lambda}}).dump();
  const Field f = from_test_function(u);
  const Field g = dilate(f, k);
  // same relative resolution for the dilated support
  norms::NormOptions og = opt;
  og.quad.max_level += k;
  r.original = norms::sobolev_top_seminorm(f, m, p, opt).value;
  r.dilated = norms::sobolev_top_seminorm(g, m, p, og).value;
  r.predicted_factor = std::pow(2.0, k * (m * p - d));
  r.observed_factor = std::pow(r.dilated / r.original, p);
  r.relative_error = std::abs(r.observed_factor - r.predicted_factor) / r.predicted_factor;
  r.full_ratio = norms::sobolev_norm(g, m, p, og).value / norms::sobolev_norm(f, m, p, opt).value;
  double lo = INFINITY, hi = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double fac = std::pow(2.0, k * (j * p - d) / p);
    lo = std::min(lo, fac);
    hi = std::max(hi, fac);
  }
  r.full_bracket = {lo, hi};
  r.passed = scaling_passed(r);
  return r;
}

}  // namespace klab::verify

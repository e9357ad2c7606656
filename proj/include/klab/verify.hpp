/**
 * @file verify.hpp
 * @brief Numerical experiments over test-function families: norm ratios,
 *        divergence fits and pass/fail reports.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klab/field.hpp"
#include "klab/norms.hpp"
#include "klab/params.hpp"
#include "klab/testfns.hpp"

namespace klab::verify {

/// Calibration constants for ratio spreads.
inline constexpr double kSameIntegrabilitySpread = 50.0;
inline constexpr double kCrossIntegrabilitySpread = 100.0;
/// Divergence fits.
inline constexpr double kExponentTolerance = 0.05;
inline constexpr double kMaxFitResidual = 0.10;
/// A Cauchy K ladder must also have a decaying growth law.
inline constexpr double kMaxConvergentGamma = -0.05;
/// Share of a localized sum carried by its three finest levels.
inline constexpr double kMaxTailShare = 0.10;

using Family = std::vector<testfns::TestFunction>;

/// beta x lambda grid on the model domain, centered at the origin.
Family make_family(const std::vector<double>& betas, const std::vector<double>& lambdas,
                   geometry::ModelDomain domain = {}, double R = 0.25);
Family default_family(geometry::ModelDomain domain = {});

struct RatioRow {
  double beta = 0.0;
  double lambda = 0.0;
  bool included = true;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  std::string numerator_class;
  std::string denominator_class;
  /// Experiment-specific auxiliary value (for example the weighted-term ratio).
  double auxiliary = 0.0;
  std::string note;
};

struct RatioReport {
  std::string experiment;
  std::string params_json;
  std::string numerator_kind;
  std::string denominator_kind;
  std::vector<RatioRow> rows;
  /// Ratios of members whose norms were both classified Finite.
  std::vector<double> ratios;
  /// Admissible members whose norms did not resolve at the configured depth.
  int unresolved = 0;
  double spread = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  /// Two-sided bound on the ratios; the spread bound when no bracket applies.
  double spread_bound = kSameIntegrabilitySpread;
  std::optional<std::pair<double, double>> bracket;
  bool passed = false;
  /// A theorem-backed finiteness contradicted by the numerics.
  bool critical = false;
  std::string note;

  std::string to_csv() const;
  std::string to_json() const;
  static RatioReport from_csv(const std::string& csv);
};

struct DivergenceReport {
  std::string experiment;
  std::string params_json;
  /// (log 1/eps_k, ||rho^-m u_lambda | L_tau(rho > eps_k)||^tau)
  std::vector<std::pair<double, double>> ladder;
  double exponent = 0.0;
  double predicted_exponent = 0.0;
  double residual = 0.0;
  bool predicted_divergent = true;
  bool k_cauchy = false;
  double k_gamma = 0.0;
  double k_value = 0.0;
  bool passed = false;
  std::string note;

  std::string to_csv() const;
  std::string to_json() const;
  static DivergenceReport from_csv(const std::string& csv);
};

RatioReport check_norm_equivalence_Kmm(const Family& family, int m, double p, const norms::NormOptions& opt = {});

RatioReport check_sharp_norm(const Family& family, int m, double a, double p, const norms::NormOptions& opt = {});

/// Global p-th power over the sum of the localized p-th powers.
RatioReport check_localization(const Family& family, int m, double a, double p, const norms::NormOptions& opt = {});

RatioReport check_rho_power_isomorphism(const Family& family, int m, double a, double a2, double p,
                                        const norms::NormOptions& opt = {});

/// Requires decide_embedding(params) = Holds.
RatioReport check_embedding_ratio(const SpaceParams& params, const Family& family, const norms::NormOptions& opt = {});

/// Counterexample u_lambda = rho^{m - d/tau}(1 + |log rho|)^lambda around an isolated point.
DivergenceReport check_counterexample_divergence(const SpaceParams& params, double lambda,
                                                 int shells = 1024);

RatioReport check_derivative_mapping(const Family& family, int m, const MultiIndex& alpha, double p,
                                     const norms::NormOptions& opt = {});

/// Ratio of the pulled-back to the original refined-localization norm.
RatioReport check_diffeo_invariance(const Family& family, const Diffeomorphism& phi, int m, double p,
                                    const norms::NormOptions& opt = {});

/// Quarter plane with vertex 0 and the annular partition of the bump template.
RatioReport check_cone_localization(const Family& family, int m, double a, double p,
                                    const norms::NormOptions& opt = {});

struct ScalingReport {
  std::string params_json;
  int k = 0;
  double original = 0.0;
  double dilated = 0.0;
  double predicted_factor = 0.0;
  double observed_factor = 0.0;
  double relative_error = 0.0;
  /// Full Sobolev norm ratio and its two-sided bracket.
  double full_ratio = 0.0;
  std::pair<double, double> full_bracket{};
  bool passed = false;

  std::string to_csv() const;
  std::string to_json() const;
  static ScalingReport from_csv(const std::string& csv);
};

inline constexpr double kScalingTolerance = 1e-10;

/// Seminorm factor within tolerance and full-norm ratio inside its bracket.
bool scaling_passed(const ScalingReport& r);

/// |u(2^k .)|_{W^m_p}^p = 2^{k(mp - d)} |u|_{W^m_p}^p for the top-order seminorm.
ScalingReport check_scaling_homogeneity(const testfns::TestFunction& u, int m, double p, int k,
                                        const norms::NormOptions& opt = {});

/// JSON summary {experiment, params, pass, statistics} recomputed from a report CSV.
std::string summarize(const std::string& csv);

}  // namespace klab::verify

/**
 * @file norms.hpp
 * @brief Kondratiev, Sobolev, refined-localization and sharp norms evaluated
 *        by Whitney-graded quadrature (and wavelet sequence norms for tau <= 1).
 */
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "klab/field.hpp"
#include "klab/norm_value.hpp"
#include "klab/params.hpp"
#include "klab/quadrature.hpp"
#include "klab/testfns.hpp"

namespace klab::norms {

struct NormOptions {
  quadrature::Options quad{};
  /// Tensor rule on each doubled cube 2Q for localized pieces.
  int piece_cells = 8;
  int piece_nodes = 4;
  /// Whitney depth of the partition of unity for localized norms.
  int pou_max_level = 10;
  /// Fine level of the wavelet route (tau <= 1).
  int wavelet_level = 10;
  /// Levels below a piece's own level used for wavelet pieces.
  int wavelet_relative_level = 5;
  /// Analytic finiteness verdict, when one is available.
  std::optional<bool> oracle_finite;
};

/// (int_{rho > eps} |rho^w u|^p)^{1/p} over the ladder eps_k = 2^-k.
NormValue weighted_lp_norm(const Field& u, double w, double p, const NormOptions& opt = {});

/// (sum_{|alpha| <= m} int |rho^{|alpha| - a} d^alpha u|^p)^{1/p}.
NormValue kondratiev_norm(const Field& u, int m, double a, double p, const NormOptions& opt = {});

/// W^m_p norm (sum_{|alpha| <= m} ||d^alpha u||_p^p)^{1/p}, the F^m_{p,2} norm for 1 < p < inf.
NormValue sobolev_norm(const Field& u, int m, double p, const NormOptions& opt = {});

/// (sum_{|alpha| = m} ||d^alpha u||_p^p)^{1/p}.
NormValue sobolev_top_seminorm(const Field& u, int m, double p, const NormOptions& opt = {});

/// F^m_{tau,2}: W^m_tau for tau > 1, wavelet sequence norm for tau <= 1.
NormValue f_norm(const Field& u, int m, double tau, const NormOptions& opt = {});

/// ||u | F^m_{tau,2}|| + ||rho^-m u | L_tau||.
NormValue rloc_norm_weighted(const Field& u, int m, double tau, const NormOptions& opt = {});

/// (sum_{j,l} ||phi_{j,l} u | F^m_{tau,2}||^tau)^{1/tau}.
NormValue rloc_norm_localized(const Field& u, int m, double tau,
                              std::shared_ptr<const geometry::PartitionOfUnity> pou, const NormOptions& opt = {});

/// (sum_{j,l} ||phi_{j,l} u | K^m_{a,p}||^p)^{1/p}.
NormValue kondratiev_localized(const Field& u, int m, double a, double p,
                               std::shared_ptr<const geometry::PartitionOfUnity> pou, const NormOptions& opt = {});

/// sum_{|alpha| = m} ||d^alpha (rho^{m-a} u)||_p + ||rho^-a u||_p.
NormValue kondratiev_sharp_norm(const Field& u, int m, double a, double p, const NormOptions& opt = {});

/// Partition of unity on the Whitney cover of u's support box.
std::shared_ptr<const geometry::PartitionOfUnity> partition_for(const Field& u, int max_level);

/// int_0^R t^e (1 + |log t|)^g dt: Finite iff e > -1, or e = -1 and g < -1.
Classification classify_radial_integral(double e, double g);

/// rho^gamma u stays in the family with beta + gamma.
testfns::TestFunction multiply_by_rho_power(const testfns::TestFunction& u, double gamma);

/// CSV columns norm_kind,m,a,p,tau,beta,lambda,value,classification.
std::string csv_header();
std::string csv_row(const NormValue& n, const SpaceParams& params, double beta, double lambda);

}  // namespace klab::norms

/**
 * @file quadrature.hpp
 * @brief Gauss-Legendre rules and the Whitney-graded integrator used by all
 *        norm evaluators.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "klab/field.hpp"
#include "klab/geometry.hpp"

namespace klab::quadrature {

/// Gauss-Legendre rule on [0, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, 1 <= n <= 64. Nodes by Newton iteration on P_n.
const Rule& gauss_legendre(int n);

using Integrand = std::function<double(const Point&)>;

/// Tensor rule on a box split into cells^d equal cells.
double integrate_box(const geometry::Box& box, const Integrand& f, int cells, int nodes);

struct Options {
  int nodes = 8;          // per dimension and cell
  int max_level = 16;     // deepest Whitney level
  int min_ladder = 4;     // first truncation index
  int cell_offset = 3;    // cells are no coarser than 2^-(start_level + cell_offset)
};

/// Integral contributions grouped by Whitney level.
struct LevelSums {
  int start_level = 0;
  std::vector<double> sums;
  double total() const;
  /// Sum over levels <= k.
  double up_to(int k) const;
};

/// The smallest box [-B, B]^d, B a power of two, containing supp u.
geometry::Box support_box(const Field& u);

/// Cover of support_box(u) down to max_level. Cached per (domain, box, level).
std::shared_ptr<const geometry::WhitneyCover> cover_for(const Field& u, int max_level);

/// Integrates f over the Whitney cubes meeting supp u, grouped by level.
/// Cubes are processed in parallel and summed in cube order.
LevelSums integrate_graded(const Field& u, const Integrand& f, const Options& opt);

enum class Classification { Finite, Divergent, Inconclusive };
std::string to_string(Classification c);

/// Finite: last three relative increments of the value ladder below 1e-3.
/// Divergent: geometric mean of the last three increment ratios of the
/// p-th power ladder >= 0.9, and the oracle (if given) does not say finite.
Classification classify_ladder(const std::vector<double>& power_ladder, double p,
                               std::optional<bool> oracle_finite = std::nullopt);

inline constexpr double kCauchyTolerance = 1e-3;
inline constexpr double kDivergentRatio = 0.9;

}  // namespace klab::quadrature

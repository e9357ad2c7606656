/**
 * @file geometry.hpp
 * @brief Model domains R^d \ R^l, planar vertex sets, the regularized
 *        distance rho, Whitney decompositions and their partitions of unity.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "klab/jet.hpp"

namespace klab {

using Point = std::array<double, kMaxDim>;

namespace geometry {

/// D = R^d \ (R^l x {0}^{d-l}).
struct ModelDomain {
  int d = 2;
  int ell = 0;
};

/// Singular set made of finitely many planar points (d = 2).
struct PolygonSingularSet {
  std::vector<std::array<double, 2>> vertices;
};

using Domain = std::variant<ModelDomain, PolygonSingularSet>;

/// Maximum number of vertices for which the soft-min keeps rho within [1/2, 2].
inline constexpr std::size_t kMaxPolygonVertices = 16;
/// Exponent of the soft-min (sum d_i^-P)^(-1/P).
inline constexpr double kSoftMinPower = 8.0;

void validate(const Domain& domain);
int dimension(const Domain& domain);
/// l for model domains, 0 for vertex sets.
int singular_dimension(const Domain& domain);

/// Exact Euclidean distance to the singular set. Throws SingularPoint on S.
double distance_to_singular_set(const Point& x, const Domain& domain);

/// rho(x) = eta(dist(x, S)) (soft-min over vertices for polygons).
double regularized_distance(const Point& x, const Domain& domain);
/// Jet of rho at x.
Jet regularized_distance_jet(const Point& x, const Domain& domain, int order);

/// Smooth profiles shared by the cap, the cut-off and the bump template.
namespace profile {
/// Degree-9 smoothstep on [0,1]: 0 -> 1 with vanishing derivatives of orders 1..4 at both ends.
/// out[k] = S^(k)(x), k = 0..4 (clamped outside [0,1]).
void smoothstep(double x, std::array<double, kMaxOrder + 1>& out);
/// C^4 cap: eta(t) = t on [0,1/2], eta = 1 on [3/2, inf), monotone in between.
/// out[k] = eta^(k)(t).
void cap(double t, std::array<double, kMaxOrder + 1>& out);
/// C^4 radial cut-off: 1 on [0,1], 0 on [2, inf).
void cutoff(double t, std::array<double, kMaxOrder + 1>& out);
/// 1D bump template for the unit cube (0,1): 1 on [0,1], 0 outside (-1/2, 3/2).
void bump(double t, std::array<double, kMaxOrder + 1>& out);
double bump_value(double t);
}  // namespace profile

/// Axis-aligned box [lo, hi] in d dimensions.
struct Box {
  int d = 2;
  Point lo{};
  Point hi{};
  double volume() const;
  bool contains(const Point& x) const;
  /// [-half, half]^d
  static Box centered(int d, double half);
};

/// Q_{j,k} = 2^{-j}((0,1)^d + k).
struct DyadicCube {
  int level = 0;
  std::array<std::int64_t, kMaxDim> k{};

  double side() const;
  Point corner() const;
  Box box(int d) const;
  /// The concentric cube with doubled side.
  Box doubled(int d) const;
  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
};

struct DyadicCubeHash {
  std::size_t operator()(const DyadicCube& c) const;
};

/// Exact dist(B, S) for a closed box B.
double box_distance_to_singular_set(const Box& b, const Domain& domain);

struct WhitneyConstants {
  double c1 = 1.0;
  double c2 = 0.0;  // 0 selects 4 sqrt(d)
};

struct WhitneyCube {
  DyadicCube cube;
  double dist = 0.0;  // dist(2Q, S)
};

class WhitneyCover {
 public:
  WhitneyCover(Domain domain, Box box, int start_level, int max_level, double c1, double c2,
               std::vector<std::vector<WhitneyCube>> levels, double collar_volume);

  const Domain& domain() const { return domain_; }
  const Box& box() const { return box_; }
  int dim() const { return box_.d; }
  int start_level() const { return start_level_; }
  int max_level() const { return max_level_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double collar_volume() const { return collar_volume_; }

  /// Cubes of level j (empty outside [start_level, max_level]).
  const std::vector<WhitneyCube>& level(int j) const;
  std::size_t count(int j) const { return level(j).size(); }
  std::size_t total_count() const { return flat_.size(); }
  /// All cubes ordered by (level, lexicographic k).
  const std::vector<WhitneyCube>& cubes() const { return flat_; }
  /// Index into cubes() or -1.
  int find(const DyadicCube& c) const;
  double covered_volume() const;

  /// Checks c1 2^-j <= dist(2Q,S) for all cubes and dist(2Q,S) <= c2 2^-j for
  /// cubes finer than the start level. Returns the number of violations.
  std::size_t certificate_violations() const;

  std::string to_json() const;

 private:
  Domain domain_;
  Box box_;
  int start_level_;
  int max_level_;
  double c1_, c2_;
  std::vector<std::vector<WhitneyCube>> levels_;
  std::vector<WhitneyCube> flat_;
  std::unordered_map<DyadicCube, int, DyadicCubeHash> index_;
  double collar_volume_;
};

/// Greedy dyadic Whitney decomposition of box \ S down to level max_level.
/// The box corners must be dyadic; the start level is the coarsest level
/// j >= 0 at which the box is a union of level-j cubes.
WhitneyCover whitney_cover(const Domain& domain, const Box& box, int max_level,
                           WhitneyConstants constants = {});

/// phi_{j,l} = bump_{j,l} / sum of bumps, with supp phi_{j,l} in 2Q_{j,l}.
class PartitionOfUnity {
 public:
  explicit PartitionOfUnity(WhitneyCover cover);

  const WhitneyCover& cover() const { return cover_; }

  struct Term {
    int index;  // into cover().cubes()
    Jet jet;
  };
  /// Jets of all phi that do not vanish at x. Throws OutsideCover when the
  /// bump sum is below kMinBumpSum.
  std::vector<Term> evaluate(const Point& x, int order) const;
  /// Same, but returns false instead of throwing.
  bool try_evaluate(const Point& x, int order, std::vector<Term>& out) const;
  /// phi_index(x); zero when x is outside 2Q.
  double value(int index, const Point& x) const;
  Jet jet(int index, const Point& x, int order) const;
  /// Sum of all phi at x (1 on the covered region).
  double sum(const Point& x) const;
  /// Number of nonzero phi at x.
  int overlap(const Point& x) const;

  static constexpr double kMinBumpSum = 1e-14;

 private:
  std::vector<std::pair<int, Jet>> bumps(const Point& x, int order) const;
  Jet bump_jet(const DyadicCube& c, const Point& x, int order) const;

  WhitneyCover cover_;
};

}  // namespace geometry
}  // namespace klab

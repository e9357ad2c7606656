/**
 * @file wavelets.hpp
 * @brief Daubechies orthonormal wavelets, tensor coefficient grids and the
 *        square-function sequence norm of F^s_{tau,2}.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klab/field.hpp"
#include "klab/norm_value.hpp"

namespace klab::wavelets {

inline constexpr int kMinFilterOrder = 2;
inline constexpr int kMaxFilterOrder = 10;
inline constexpr int kCascadeResolution = 12;
inline constexpr int kMaxLevel = 12;

/// Scaling filter h_0..h_{2N-1} of the N-vanishing-moment Daubechies family,
/// normalized to sum sqrt(2).
std::vector<double> daubechies_filter(int N);

/// Hoelder regularity of the order-N scaling function (frozen table, N = 2..10).
double holder_regularity(int N);

/// Shortest order with regularity strictly above m; Unsupported beyond the table.
int order_for_smoothness(int m);

struct WaveletSystem {
  int order = 0;  // N: vanishing moments
  double regularity = 0.0;
  std::vector<double> h;  // scaling filter
  std::vector<double> g;  // wavelet filter g_k = (-1)^k h_{2N-1-k}
  int resolution = kCascadeResolution;
  /// phi and psi at x = i 2^-resolution, i = 0 .. (2N-1) 2^resolution.
  std::vector<double> phi;
  std::vector<double> psi;

  int support_length() const { return 2 * order - 1; }
  /// Table lookup with linear interpolation; zero outside [0, 2N-1].
  double phi_at(double x) const;
  double psi_at(double x) const;
};

/// System for smoothness m (regularity > m).
WaveletSystem build_wavelet_system(int m);
WaveletSystem build_wavelet_system_of_order(int N);

/// Coefficients of one level and all of its genders over a common index box.
struct LevelBlock {
  int level = 0;
  std::array<std::int64_t, kMaxDim> lo{};
  std::array<std::int64_t, kMaxDim> count{1, 1, 1};
  /// bands[G] for gender G; G = 0 is the scaling band (stored only at level 0).
  std::vector<std::vector<double>> bands;

  std::size_t size() const { return static_cast<std::size_t>(count[0] * count[1] * count[2]); }
  std::size_t offset(const std::array<std::int64_t, kMaxDim>& k) const;
};

struct CoefficientGrid {
  int d = 2;
  int J = 0;  // fine level; wavelet levels are 0..J-1
  int order = 0;
  geometry::Box box;
  LevelBlock scaling;               // level 0, band 0
  std::vector<LevelBlock> details;  // details[j], bands 1..2^d-1

  double sum_of_squares() const;
  double max_abs(int level) const;
  /// Flat CSV: j,G,k0[,k1[,k2]],value (nonzero entries, deterministic order).
  std::string to_csv() const;
};

/// <u, 2^{jd/2} Psi^G(2^j . - k)> for j < J plus the level-0 scaling
/// coefficients. u must vanish outside box; the box corners must be multiples
/// of 2^-J.
CoefficientGrid wavelet_coefficients(const Field& u, const WaveletSystem& system, int J, const geometry::Box& box);

/// Samples 2^{Jd/2} Psi^G(2^J x - k) for synthesis tests.
Field wavelet_field(const WaveletSystem& system, int d, int level, int gender, const std::array<std::int64_t, kMaxDim>& k);

/// L_tau norm of the square function
/// (sum_{j,G,k} (2^{js} 2^{jd/2} |lambda_{j,G,k}| chi_{j,k})^2)^{1/2}.
/// The ladder truncates at wavelet level t; tail share > 10% is Inconclusive.
NormValue f_sequence_norm(const CoefficientGrid& coeffs, double s, double tau);

inline constexpr double kMaxTailShare = 0.10;

}  // namespace klab::wavelets

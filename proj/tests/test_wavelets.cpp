/**
 * @file test_wavelets.cpp
 */
#include <gtest/gtest.h>

#include <cmath>

#include "klab/errors.hpp"
#include "klab/norms.hpp"
#include "klab/wavelets.hpp"
#include "oracles.hpp"

using namespace klab;
using namespace klab::wavelets;

namespace {

// Empty grid on [0,1]^2 with n x n coefficients per level and all four bands.
CoefficientGrid empty_grid(int J) {
  CoefficientGrid g;
  g.d = 2;
  g.J = J;
  g.box = geometry::Box{2, {0.0, 0.0, 0.0}, {1.0, 1.0, 0.0}};
  g.scaling.level = 0;
  g.scaling.count = {1, 1, 1};
  g.scaling.bands.assign(1, std::vector<double>(1, 0.0));
  for (int j = 0; j < J; ++j) {
    LevelBlock b;
    b.level = j;
    b.count = {std::int64_t{1} << j, std::int64_t{1} << j, 1};
    b.bands.assign(4, std::vector<double>(b.size(), 0.0));
    g.details.push_back(b);
  }
  return g;
}

}  // namespace

TEST(Filter, D2ClosedForm) {
  const auto h = daubechies_filter(2);
  const double s3 = std::sqrt(3.0), n = 4.0 * std::sqrt(2.0);
  const double ref[4] = {(1 + s3) / n, (3 + s3) / n, (3 - s3) / n, (1 - s3) / n};
  ASSERT_EQ(h.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(h[i], ref[i], 1e-14);
}

TEST(Filter, SumAndShiftOrthogonality) {
  for (int N = kMinFilterOrder; N <= kMaxFilterOrder; ++N) {
    const auto h = daubechies_filter(N);
    double s = 0.0;
    for (double v : h) s += v;
    EXPECT_NEAR(s, std::sqrt(2.0), 1e-12) << N;
    for (int n = 0; 2 * n < static_cast<int>(h.size()); ++n) {
      double dot = 0.0;
      for (std::size_t k = 0; k + 2 * n < h.size(); ++k) dot += h[k] * h[k + 2 * n];
      EXPECT_NEAR(dot, n == 0 ? 1.0 : 0.0, 1e-12) << N << " " << n;
    }
  }
}

TEST(System, OrderSelection) {
  EXPECT_EQ(order_for_smoothness(1), 3);
  EXPECT_GT(holder_regularity(3), 1.0);
  EXPECT_THROW(order_for_smoothness(4), Unsupported);
}

TEST(System, ScalingShiftsOrthonormal) {
  const auto sys = build_wavelet_system(1);
  const double h = std::ldexp(1.0, -sys.resolution);
  const int L = sys.support_length();
  for (int shift = 0; shift <= 2; ++shift) {
    double dot = 0.0;
    for (double x = 0.0; x < L; x += h) dot += sys.phi_at(x) * sys.phi_at(x - shift) * h;
    EXPECT_NEAR(dot, shift == 0 ? 1.0 : 0.0, 1e-8) << shift;
  }
  double pw = 0.0;
  for (double x = 0.0; x < L; x += h) pw += sys.psi_at(x) * sys.phi_at(x) * h;
  EXPECT_NEAR(pw, 0.0, 1e-8);
}

TEST(Coefficients, SingleWaveletIsImpulse) {
  const auto sys = build_wavelet_system(1);
  const std::array<std::int64_t, kMaxDim> k{3, 5, 0};
  const Field w = wavelet_field(sys, 2, 5, 1, k);
  const geometry::Box box{2, {-1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}};
  const auto grid = wavelet_coefficients(w, sys, 6, box);
  const auto& blk = grid.details[5];
  EXPECT_NEAR(blk.bands[1][blk.offset(k)], 1.0, 1e-6);
  EXPECT_NEAR(grid.sum_of_squares(), 1.0, 1e-6);
}

TEST(Coefficients, ZeroField) {
  const auto sys = build_wavelet_system(1);
  const geometry::Box box{2, {-1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}};
  const auto grid = wavelet_coefficients(zero_field(geometry::ModelDomain{2, 0}), sys, 4, box);
  EXPECT_EQ(grid.sum_of_squares(), 0.0);
}

TEST(Coefficients, ParsevalForCutoff) {
  const auto sys = build_wavelet_system(1);
  const auto u = from_test_function(testfns::make_test_function(0.0, 0.0, 0.25, {2, 0}));
  const geometry::Box box{2, {-1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}};
  const auto grid = wavelet_coefficients(u, sys, 10, box);
  const double ref = oracle::weighted_lp_power(2, 0.0, 0.0, 0.25, 0.0, 2.0);
  EXPECT_NEAR(grid.sum_of_squares(), ref, 0.01 * ref);
}

TEST(SequenceNorm, SingleCoefficientClosedForm) {
  const int J = 6, j = 2;
  for (double tau : {0.8, 1.5, 2.0})
    for (double s : {1.0, 2.0}) {
      auto g = empty_grid(J);
      auto& b = g.details[j];
      b.bands[1][b.offset({1, 2, 0})] = 1.0;
      const double expect = std::pow(2.0, j * s) * std::pow(2.0, j * 2 / 2.0) * std::pow(2.0, -j * 2 / tau);
      EXPECT_NEAR(f_sequence_norm(g, s, tau).value, expect, 1e-12 * expect) << tau << " " << s;
    }
}

TEST(SequenceNorm, L2CaseIsCoefficientNorm) {
  auto g = empty_grid(5);
  double ss = 0.0;
  int c = 0;
  for (int j = 0; j < 5; ++j)
    for (int G = 1; G < 4; ++G)
      for (auto& v : g.details[j].bands[G]) {
        v = std::sin(1.0 + 0.37 * (c++));
        ss += v * v;
      }
  g.scaling.bands[0][0] = 0.5;
  ss += 0.25;
  EXPECT_NEAR(f_sequence_norm(g, 0.0, 2.0).value, std::sqrt(ss), 1e-10 * std::sqrt(ss));
}

TEST(SequenceNorm, HomogeneousAndPositive) {
  auto g = empty_grid(4);
  g.details[1].bands[2][1] = 0.3;
  g.details[3].bands[3][7] = -0.2;
  const double a = f_sequence_norm(g, 1.0, 0.9).value;
  for (auto& blk : g.details)
    for (auto& band : blk.bands)
      for (auto& v : band) v *= -2.5;
  EXPECT_GT(a, 0.0);
  EXPECT_NEAR(f_sequence_norm(g, 1.0, 0.9).value, 2.5 * a, 1e-12 * a);
  EXPECT_THROW(f_sequence_norm(g, 0.1, 0.5), InvalidParams);
}

TEST(Coefficients, DecayNearSingularPoint) {
  // max level-j coefficient of rho^beta zeta decays like 2^{-j(beta + d/2)}
  const double beta = 0.5;
  const auto sys = build_wavelet_system(1);
  const auto u = from_test_function(testfns::make_test_function(beta, 0.0, 0.25, {2, 0}));
  const geometry::Box box{2, {-1.0, -1.0, 0.0}, {1.0, 1.0, 0.0}};
  const auto grid = wavelet_coefficients(u, sys, 9, box);
  const double slope = std::log2(grid.max_abs(5) / grid.max_abs(8)) / 3.0;
  EXPECT_NEAR(slope, beta + 1.0, 0.3);
}

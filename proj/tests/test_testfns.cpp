/**
 * @file test_testfns.cpp
 */
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "klab/errors.hpp"
#include "klab/testfns.hpp"
#include "oracles.hpp"

using namespace klab;
using namespace klab::testfns;

TEST(TestFunction, PlainCutoffAndPower) {
  const auto z = make_test_function(0.0, 0.0, 1.0, {2, 0});
  for (double r : {0.1, 0.9, 1.3, 1.7, 2.5})
    EXPECT_NEAR(z.value({r / std::sqrt(2.0), r / std::sqrt(2.0), 0.0}), oracle::zeta(r), 1e-14);
  const auto u = make_test_function(1.0, 0.0, 1.0, {2, 0});
  EXPECT_NEAR(u.value({0.0, 0.25, 0.0}), 0.25, 1e-15);
}

TEST(TestFunction, LogPowerValue) {
  const auto u = make_test_function(-0.5, -0.7, 1.0, {2, 0});
  const double r = std::exp(-1.0);
  EXPECT_NEAR(u.value({r, 0.0, 0.0}), std::exp(0.5) * std::pow(2.0, -0.7), 1e-13);
}

TEST(TestFunction, GradientOfSquare) {
  const auto u = make_test_function(2.0, 0.0, 1.0, {2, 0});
  EXPECT_NEAR(eval_derivative(u, {1, 0, 0}, {0.3, 0.4, 0.0}), 0.6, 1e-14);
  EXPECT_NEAR(eval_derivative(u, {0, 0, 0}, {0.3, 0.2, 0.0}), u.value({0.3, 0.2, 0.0}), 0.0);
}

TEST(TestFunction, FirstDerivativeMatchesRadialFormula) {
  const double beta = -0.5, lambda = -0.7, R = 0.25;
  const auto u = make_test_function(beta, lambda, R, {2, 0});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rad(0.01, 0.49), ang(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 100; ++i) {
    const double r = rad(rng), t = ang(rng);
    const Point x{r * std::cos(t), r * std::sin(t), 0.0};
    const double expect = oracle::radial_du(r, beta, lambda, R) * std::cos(t);
    EXPECT_NEAR(eval_derivative(u, {1, 0, 0}, x), expect, 1e-9 * (1.0 + std::abs(expect)));
  }
}

TEST(TestFunction, SecondDerivativeMatchesCentralDifference) {
  const auto u = make_test_function(0.7, -0.7, 0.25, {3, 1});
  const Point x{0.05, 0.11, -0.07};
  const double h = 1e-5;
  auto dx1 = [&](double y) { return eval_derivative(u, {0, 1, 0}, {x[0], y, x[2]}); };
  EXPECT_NEAR(eval_derivative(u, {0, 2, 0}, x), (dx1(x[1] + h) - dx1(x[1] - h)) / (2 * h), 1e-5);
  // the function does not depend on the coordinate along the singular line except through the cut-off
  const auto flat = make_test_function(0.7, 0.0, 10.0, {3, 1});
  EXPECT_NEAR(eval_derivative(flat, {1, 0, 0}, x), 0.0, 1e-14);
}

TEST(TestFunction, ErrorsAndJson) {
  const auto u = make_test_function(0.5, 0.0, 0.25, {2, 0});
  EXPECT_THROW(eval_derivative(u, {3, 2, 0}, {0.1, 0.1, 0.0}), Unsupported);
  EXPECT_THROW(eval_derivative(u, {1, 0, 0}, {0.0, 0.0, 0.0}), SingularPoint);
  EXPECT_NE(u.to_json().find("\"beta\""), std::string::npos);
}

TEST(Membership, KondratievExponentRule) {
  auto u = make_test_function(-0.5, 0.0, 0.25, {2, 0});
  EXPECT_TRUE(kondratiev_membership(u, 1, 0.0, 2.0).member);
  u.beta = -1.0;  // a - (d - l)/p
  auto v = kondratiev_membership(u, 1, 0.0, 2.0);
  EXPECT_FALSE(v.member);
  EXPECT_TRUE(v.boundary_case);
  u.lambda = -1.0;
  EXPECT_TRUE(kondratiev_membership(u, 1, 0.0, 2.0).member);
}

TEST(Membership, RadialFSpaceRule) {
  EXPECT_TRUE(f_space_membership_radial(0.5, 0.0, 1.0, 2.0, 0, 2).member);
  const auto eq = f_space_membership_radial(0.5, 0.0, 1.5, 2.0, 0, 2);
  EXPECT_FALSE(eq.member);
  EXPECT_TRUE(eq.determined);
  const auto neg = f_space_membership_radial(0.0, -1.0, 1.0, 2.0, 0, 2);
  EXPECT_FALSE(neg.determined);
}

TEST(Membership, ScalingCovariance) {
  // u(2x) keeps (beta, lambda) and halves R; verdicts do not depend on R
  for (double beta : {-1.2, -0.5, 0.3})
    for (double R : {0.25, 0.125}) {
      const auto u = make_test_function(beta, -0.7, R, {2, 0});
      EXPECT_EQ(kondratiev_membership(u, 1, 0.0, 2.0).member, beta > -1.0 || (beta == -1.0 && -0.7 * 2 < -1));
    }
}

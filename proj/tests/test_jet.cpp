/**
 * @file test_jet.cpp
 */
#include <gtest/gtest.h>

#include <cmath>

#include "klab/jet.hpp"

using namespace klab;

TEST(Jet, MonomialCounts) {
  EXPECT_EQ(monomial_count(1, 4), 5);
  EXPECT_EQ(monomial_count(2, 4), 15);
  EXPECT_EQ(monomial_count(3, 4), 35);
  EXPECT_EQ(multi_indices_of_degree(2, 2).size(), 3u);
  EXPECT_EQ(multi_indices_of_degree(3, 2).size(), 6u);
}

TEST(Jet, ExpOfLinearFormHasProductDerivatives) {
  // f = exp(x + 2y): d^alpha f = 2^alpha_1 f
  const double x0 = 0.3, y0 = -0.2;
  const Jet f = exp(Jet::variable(2, 4, 0, x0) + 2.0 * Jet::variable(2, 4, 1, y0));
  const double v = std::exp(x0 + 2.0 * y0);
  for (const auto& al : multi_indices(2, 4)) EXPECT_NEAR(f.partial(al), v * std::pow(2.0, al[1]), 1e-12 * v * 16);
}

TEST(Jet, PowAndLogMatchClosedForm) {
  // g(r) = r^b (1 - log r)^l at r0, one variable
  const double r0 = 0.37, b = 1.3, l = -0.7;
  const Jet r = Jet::variable(1, 3, 0, r0);
  const Jet g = pow(r, b) * pow(-log(r) + 1.0, l);
  const double L = 1.0 - std::log(r0);
  const double d1 = b * std::pow(r0, b - 1) * std::pow(L, l) - l * std::pow(r0, b - 1) * std::pow(L, l - 1);
  EXPECT_NEAR(g.value(), std::pow(r0, b) * std::pow(L, l), 1e-14);
  EXPECT_NEAR(g.partial({1, 0, 0}), d1, 1e-13);
  // second derivative by a central difference of the first
  const double h = 1e-5;
  auto first = [&](double x) {
    const double Lx = 1.0 - std::log(x);
    return b * std::pow(x, b - 1) * std::pow(Lx, l) - l * std::pow(x, b - 1) * std::pow(Lx, l - 1);
  };
  EXPECT_NEAR(g.partial({2, 0, 0}), (first(r0 + h) - first(r0 - h)) / (2 * h), 1e-7);
}

TEST(Jet, ComposeIsChainRule) {
  // outer(s, q) = s q with s = sin x, q = x^2
  const double x0 = 0.4;
  const Jet x = Jet::variable(1, 3, 0, x0);
  std::array<double, 4> sd{std::sin(x0), std::cos(x0), -std::sin(x0), -std::cos(x0)};
  const Jet s = x.apply(sd);
  const Jet q = x * x;
  const Jet outer = Jet::variable(2, 3, 0, s.value()) * Jet::variable(2, 3, 1, q.value());
  const std::array<Jet, 2> inner{s, q};
  const Jet h = compose(outer, inner);
  // (sin x * x^2)' = cos x x^2 + 2x sin x
  EXPECT_NEAR(h.partial({1, 0, 0}), std::cos(x0) * x0 * x0 + 2 * x0 * std::sin(x0), 1e-14);
  EXPECT_NEAR(h.partial({3, 0, 0}),
              -std::cos(x0) * x0 * x0 - 6 * x0 * std::sin(x0) + 6 * std::cos(x0), 1e-12);
}

TEST(Jet, DerivativeShiftsCoefficients) {
  const Jet x = Jet::variable(2, 4, 0, 0.5), y = Jet::variable(2, 4, 1, 2.0);
  const Jet f = x * x * x * y;  // d_x f = 3 x^2 y, d_xy f = 3 x^2
  const Jet g = f.derivative({1, 0, 0});
  EXPECT_EQ(g.order(), 3);
  EXPECT_NEAR(g.value(), 3 * 0.25 * 2.0, 1e-14);
  EXPECT_NEAR(g.partial({0, 1, 0}), 3 * 0.25, 1e-14);
}

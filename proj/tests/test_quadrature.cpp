/**
 * @file test_quadrature.cpp
 */
#include <gtest/gtest.h>

#include <cmath>

#include "klab/errors.hpp"
#include "klab/quadrature.hpp"

using namespace klab;
using namespace klab::quadrature;

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n : {1, 4, 8, 20, 64}) {
    const Rule& r = gauss_legendre(n);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
    for (int k = 0; k < 2 * n && k < 60; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      EXPECT_NEAR(s, 1.0 / (k + 1), 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussLegendre, RejectsBadOrder) {
  EXPECT_THROW(gauss_legendre(0), InvalidParams);
  EXPECT_THROW(gauss_legendre(65), InvalidParams);
}

TEST(IntegrateBox, SeparableProduct) {
  const geometry::Box b{2, {0.0, -1.0, 0.0}, {1.0, 2.0, 0.0}};
  const double v = integrate_box(b, [](const Point& x) { return std::exp(x[0]) * x[1] * x[1]; }, 2, 8);
  EXPECT_NEAR(v, (std::exp(1.0) - 1.0) * 3.0, 1e-12);
}

TEST(Classify, LadderRules) {
  std::vector<double> conv, div;
  for (int k = 1; k <= 20; ++k) {
    conv.push_back(1.0 - std::pow(2.0, -3.0 * k));
    div.push_back(static_cast<double>(k));
  }
  EXPECT_EQ(classify_ladder(conv, 2.0), Classification::Finite);
  EXPECT_EQ(classify_ladder(div, 2.0), Classification::Divergent);
  EXPECT_EQ(classify_ladder(div, 2.0, true), Classification::Inconclusive);
  EXPECT_EQ(to_string(Classification::Finite), "Finite");
}

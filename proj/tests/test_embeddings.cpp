/**
 * @file test_embeddings.cpp
 */
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "klab/embeddings.hpp"
#include "klab/errors.hpp"

using namespace klab;
using namespace klab::embeddings;

namespace {
SpaceParams P(int m, double a, double p, double tau, int d, double delta, int ell = 0) {
  SpaceParams s;
  s.m = m;
  s.a = a;
  s.p = p;
  s.tau = tau;
  s.d = d;
  s.delta = delta;
  s.ell = ell;
  return s;
}
}  // namespace

TEST(Sigma, Formula) {
  EXPECT_DOUBLE_EQ(sigma(2.0, 2.0, 2), 0.0);
  EXPECT_DOUBLE_EQ(sigma(0.5, 2.0, 2), 2.0);
  EXPECT_DOUBLE_EQ(sigma(1.0, 2.0, 3), 0.0);
}

TEST(Adaptivity, Scale) {
  EXPECT_DOUBLE_EQ(adaptivity_scale(2, 1), 1.0);
  EXPECT_NEAR(adaptivity_scale(3, 3), 2.0 / 3.0, 1e-15);
  EXPECT_LT(adaptivity_scale(2, 1e-9), 2.0);
  EXPECT_NEAR(adaptivity_scale(2, 1e-9), 2.0, 1e-8);
}

TEST(DecideEmbedding, Examples) {
  auto v = decide_embedding(P(2, 2, 2, 2, 2, 0));
  EXPECT_EQ(v.outcome, Outcome::Holds);
  EXPECT_EQ(v.trigger, "tau = p and m <= a");
  EXPECT_EQ(decide_embedding(P(2, 1, 2, 1, 2, 0)).outcome, Outcome::Fails);
  EXPECT_EQ(decide_embedding(P(2, 1, 2, 0.9, 2, 0)).outcome, Outcome::Holds);
  v = decide_embedding(P(1, 0, 2, 3, 2, 0));
  EXPECT_EQ(v.outcome, Outcome::Fails);
  EXPECT_EQ(v.trigger, "necessity: tau <= p");
  // m <= sigma
  EXPECT_EQ(decide_embedding(P(1, 0.9, 2, 0.5, 2, 0)).outcome, Outcome::Fails);
  EXPECT_THROW(decide_embedding(P(1, 0, 1, 1, 2, 0)), InvalidParams);
  EXPECT_THROW(decide_embedding(P(1, 0, 2, 1, 2, 2)), InvalidParams);
  EXPECT_NE(v.to_json().find("conditionValues"), std::string::npos);
}

TEST(DecideEmbedding, MonotoneInA) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ua(-1, 3), up(1.1, 4), ut(0.5, 4);
  for (int i = 0; i < 500; ++i) {
    const auto s = P(1 + i % 3, ua(rng), up(rng), ut(rng), 2 + i % 2, i % 2 ? 1.0 : 0.0);
    if (decide_embedding(s).outcome != Outcome::Holds) continue;
    auto t = s;
    t.a += 0.3;
    EXPECT_EQ(decide_embedding(t).outcome, Outcome::Holds);
  }
}

TEST(DecideEmbedding, CriticalTauClosedForm) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(-1, 0.95), up(1.1, 4), ut(0.5, 4);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 3, d = 2 + i % 2;
    const double delta = i % 4 < 2 ? 0.0 : 1.0;
    const double a = ua(rng), p = up(rng), tau = ut(rng);
    const auto s = P(m, a, p, tau, d, delta);
    if (tau == p || !(m > sigma(tau, 2.0, d))) continue;
    const double tcrit = 1.0 / ((m - a) / (d - delta) + 1.0 / p);
    EXPECT_EQ(decide_embedding(s).outcome == Outcome::Holds, tau < tcrit);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(DecideEmbedding, ReverseConsistency) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ua(-1, 3), up(1.1, 4), ut(0.5, 4);
  for (int i = 0; i < 1000; ++i) {
    const auto s = P(1 + i % 3, ua(rng), up(rng), i % 5 == 0 ? 2.0 : ut(rng), 2 + i % 2, 0.0);
    auto t = s;
    if (i % 5 == 0) t.p = 2.0;
    const bool both = decide_embedding(t).outcome == Outcome::Holds &&
                      decide_reverse_embedding(t).outcome == Outcome::Holds;
    if (both) {
      EXPECT_EQ(t.tau, t.p);
      EXPECT_EQ(t.a, t.m);
    }
  }
  EXPECT_EQ(decide_reverse_embedding(P(2, 2, 2, 2, 2, 0)).outcome, Outcome::Holds);
  EXPECT_EQ(decide_embedding(P(2, 2, 2, 2, 2, 0)).outcome, Outcome::Holds);
}

TEST(DecideEmbedding, AdaptivityBracket) {
  for (auto [m, a, d, delta] : {std::tuple{1, 0.0, 2, 0.0}, {2, 0.5, 3, 1.0}, {1, 0.5, 2, 0.0}}) {
    const double ts = pde_regularity_tau(m, a, d, delta);
    EXPECT_EQ(decide_embedding(P(m + 1, a + 1, 2, ts - 1e-6, d, delta)).outcome, Outcome::Holds);
    EXPECT_EQ(decide_embedding(P(m + 1, a + 1, 2, ts + 1e-6, d, delta)).outcome, Outcome::Fails);
  }
}

TEST(HolderRoute, Examples) {
  auto [v1, r1] = decide_embedding_holder_route(P(1, 0.5, 4, 1.5, 2, 0, 0));
  EXPECT_EQ(v1.outcome, Outcome::UndeterminedByPaper);
  EXPECT_FALSE(r1.applies);
  auto [v2, r2] = decide_embedding_holder_route(P(1, 0.9, 4, 1.1, 3, 0, 0));
  EXPECT_EQ(v2.outcome, Outcome::UndeterminedByPaper);
  EXPECT_FALSE(r2.improved_applies);
  auto [v3, r3] = decide_embedding_holder_route(P(1, 0.8, 6, 1.5, 3, 0, 0));
  EXPECT_EQ(v3.outcome, Outcome::UndeterminedByPaper);
  EXPECT_NEAR(r3.eta, 6.0 / 5.0, 1e-14);
  EXPECT_NEAR(r3.r, 2.0, 1e-14);
  // a window that is open: m/d < 1/p requires a large d relative to m p
  auto [v4, r4] = decide_embedding_holder_route(P(1, 2.0, 1.5, 1.2, 3, 0, 1));
  EXPECT_TRUE(r4.applies);
  EXPECT_EQ(v4.outcome, Outcome::Holds);
  EXPECT_THROW(decide_embedding_holder_route(P(1, 0, 2, 3, 2, 0, 0)), InvalidParams);
}

TEST(ReverseEmbedding, Examples) {
  EXPECT_EQ(decide_reverse_embedding(P(2, 1, 2, 2, 2, 0)).outcome, Outcome::Holds);
  EXPECT_EQ(decide_reverse_embedding(P(1, 2.0, 2, 4, 2, 0)).outcome, Outcome::Fails);
  const auto v = decide_reverse_embedding(P(1, 0, 2, 1.5, 2, 0));
  EXPECT_EQ(v.outcome, Outcome::Fails);
  EXPECT_EQ(v.trigger, "necessity: p <= tau");
  EXPECT_EQ(decide_reverse_embedding(P(2, 0, 2, 4, 2, 0)).outcome, Outcome::Holds);
}

TEST(PdeTau, Examples) {
  EXPECT_DOUBLE_EQ(pde_regularity_tau(1, 0, 2, 0), 1.0);
  EXPECT_NEAR(pde_regularity_tau(2, 0, 3, 1), 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(pde_regularity_tau(1, 1, 2, 0), 2.0);
  EXPECT_THROW(pde_regularity_tau(1, 1.5, 2, 0), InvalidParams);
  EXPECT_THROW(pde_regularity_tau(1, 0.5, 2, 0, 0.4), InvalidParams);
}

TEST(Threshold, Examples) {
  EXPECT_DOUBLE_EQ(technical_threshold_a(0, 2, 0.5, 2).value, -1.0);
  EXPECT_FALSE(technical_threshold_a(0, 2, 0.5, 2).vacuous);
  EXPECT_DOUBLE_EQ(technical_threshold_a(1, 3, 1.0, 2).value, -1.0);
  EXPECT_TRUE(technical_threshold_a(1, 3, 1.0, 2).vacuous);
}

/**
 * @file test_verify.cpp
 */
#include <gtest/gtest.h>

#include <cmath>

#include "json.hpp"
#include "klab/errors.hpp"
#include "klab/verify.hpp"

using namespace klab;
using namespace klab::verify;

TEST(Family, GridOrderAndDefault) {
  const auto f = make_family({0.5, 1.0}, {0.0, -0.7});
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[1].beta, 1.0);
  EXPECT_EQ(f[1].lambda, 0.0);
  EXPECT_EQ(f[2].lambda, -0.7);
  EXPECT_EQ(default_family().size(), 14u);
}

TEST(Ratio, SingletonHasUnitSpread) {
  const auto r = check_norm_equivalence_Kmm(make_family({1.2}, {0.0}), 1, 2.0);
  EXPECT_TRUE(r.passed);
  EXPECT_DOUBLE_EQ(r.spread, 1.0);
}

TEST(Ratio, EmptyFamilyThrows) {
  EXPECT_THROW(check_norm_equivalence_Kmm({}, 1, 2.0), EmptyFamily);
  SpaceParams sp;
  sp.m = 2;
  sp.a = 1;
  sp.tau = 0.9;
  EXPECT_THROW(check_embedding_ratio(sp, {}), EmptyFamily);
}

TEST(Ratio, NonMemberExcluded) {
  // beta = -0.2 lies outside K^1_{1,2} in d = 2
  const auto r = check_norm_equivalence_Kmm(make_family({-0.2, 1.2}, {0.0}), 1, 2.0);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_FALSE(r.rows[0].included);
  EXPECT_FALSE(r.rows[0].note.empty());
  EXPECT_EQ(r.ratios.size(), 1u);
}

TEST(Ratio, RhoPowerIdentity) {
  const auto r = check_rho_power_isomorphism(make_family({0.8, 1.6}, {0.0}), 1, 0.5, 0.5, 2.0);
  for (double v : r.ratios) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(Ratio, DerivativeOfOrderZeroIsIdentity) {
  const auto r = check_derivative_mapping(make_family({1.6}, {0.0}), 1, {0, 0, 0}, 2.0);
  ASSERT_EQ(r.ratios.size(), 1u);
  EXPECT_NEAR(r.ratios[0], 1.0, 1e-12);
}

TEST(Ratio, RotationKeepsWeightedTerm) {
  const auto r = check_diffeo_invariance(make_family({1.2}, {0.0}), diffeo::rotation(0.4), 1, 2.0);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_NEAR(r.rows[0].auxiliary, 1.0, 1e-8);
  EXPECT_TRUE(r.passed);
}

TEST(Ratio, IdentityDiffeoUnitRatio) {
  const auto r = check_diffeo_invariance(make_family({1.2}, {0.0}), diffeo::identity(2), 1, 2.0);
  ASSERT_EQ(r.ratios.size(), 1u);
  EXPECT_NEAR(r.ratios[0], 1.0, 1e-12);
}

TEST(Report, CsvRoundTrip) {
  const auto r = check_sharp_norm(make_family({0.8, 1.6}, {0.0}), 1, 1.0, 2.0);
  const auto back = RatioReport::from_csv(r.to_csv());
  EXPECT_EQ(back.to_csv(), r.to_csv());
  EXPECT_EQ(summarize(r.to_csv()), r.to_json());
  const auto j = nlohmann::json::parse(r.to_json());
  for (const char* key : {"experiment", "params", "pass", "statistics"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Counterexample, CriticalLineDiverges) {
  SpaceParams sp;
  sp.m = 1;
  sp.a = 0;
  sp.p = 2;
  sp.tau = 1;
  sp.d = 2;
  const auto r = check_counterexample_divergence(sp, -0.7);
  EXPECT_TRUE(r.passed) << r.note;
  EXPECT_NEAR(r.exponent, 0.3, kExponentTolerance);
  EXPECT_TRUE(r.k_cauchy);
  EXPECT_EQ(summarize(r.to_csv()), r.to_json());
}

TEST(Counterexample, SteepLogIsNotACounterexample) {
  SpaceParams sp;
  sp.m = 1;
  sp.a = 0;
  sp.p = 2;
  sp.tau = 1;
  sp.d = 2;
  const auto r = check_counterexample_divergence(sp, -1.5);
  EXPECT_FALSE(r.predicted_divergent);
  EXPECT_NE(r.note.find("not a counterexample"), std::string::npos);
}

TEST(Scaling, TrivialAndNontrivialShift) {
  const auto u = testfns::make_test_function(1.5, 0.0, 0.25, {2, 0});
  const auto r0 = check_scaling_homogeneity(u, 1, 2.0, 0);
  EXPECT_NEAR(r0.observed_factor, 1.0, 1e-14);
  const auto r = check_scaling_homogeneity(u, 2, 2.0, 2);
  EXPECT_DOUBLE_EQ(r.predicted_factor, 16.0);
  EXPECT_LT(r.relative_error, kScalingTolerance);
  EXPECT_TRUE(scaling_passed(r));
  EXPECT_EQ(summarize(r.to_csv()), r.to_json());
}

/**
 * @file test_geometry.cpp
 */
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "klab/errors.hpp"
#include "klab/geometry.hpp"
#include "oracles.hpp"

using namespace klab;
using namespace klab::geometry;

TEST(Profile, SmoothstepMatchesPolynomial) {
  std::array<double, kMaxOrder + 1> out{};
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.8, 1.0}) {
    profile::smoothstep(x, out);
    EXPECT_NEAR(out[0], oracle::smoothstep(x), 1e-15);
    EXPECT_NEAR(out[1], oracle::smoothstep_prime(x), 1e-12);
  }
  profile::smoothstep(0.5, out);
  EXPECT_NEAR(out[0], 0.5, 1e-15);
}

TEST(Profile, CapCutoffAndBumpShapes) {
  std::array<double, kMaxOrder + 1> out{};
  profile::cap(0.3, out);
  EXPECT_DOUBLE_EQ(out[0], 0.3);
  EXPECT_DOUBLE_EQ(out[1], 1.0);
  profile::cap(1.5, out);
  EXPECT_NEAR(out[0], 1.0, 1e-15);
  profile::cap(7.0, out);
  EXPECT_DOUBLE_EQ(out[0], 1.0);
  for (double t : {0.0, 0.5, 1.0}) {
    profile::cutoff(t, out);
    EXPECT_DOUBLE_EQ(out[0], 1.0);
  }
  profile::cutoff(1.4, out);
  EXPECT_NEAR(out[0], oracle::zeta(1.4), 1e-15);
  profile::cutoff(2.0, out);
  EXPECT_DOUBLE_EQ(out[0], 0.0);
  EXPECT_DOUBLE_EQ(profile::bump_value(0.5), 1.0);
  EXPECT_DOUBLE_EQ(profile::bump_value(-0.5), 0.0);
  EXPECT_DOUBLE_EQ(profile::bump_value(1.5), 0.0);
  EXPECT_GT(profile::bump_value(-0.2), 0.0);
}

TEST(Distance, ModelDomainAndPolygon) {
  const ModelDomain plane{3, 1};
  EXPECT_NEAR(distance_to_singular_set({5.0, 3.0, 4.0}, plane), 5.0, 1e-15);
  EXPECT_THROW(distance_to_singular_set({1.0, 0.0, 0.0}, plane), SingularPoint);
  const PolygonSingularSet tri{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}};
  EXPECT_NEAR(distance_to_singular_set({0.9, 0.0, 0.0}, tri), 0.1, 1e-15);
  // regularized distance is equivalent to the true one near S
  for (double t : {1e-3, 1e-2, 0.1}) {
    const Point x{t, t, 0.0};
    const double r = regularized_distance(x, tri), dist = distance_to_singular_set(x, tri);
    EXPECT_GE(r / dist, 0.5);
    EXPECT_LE(r / dist, 2.0);
  }
  EXPECT_NEAR(regularized_distance({0.2, 0.0, 0.0}, ModelDomain{2, 0}), 0.2, 1e-15);
}

TEST(Whitney, CertificatesAndCounts) {
  for (int ell : {0, 1}) {
    const ModelDomain dom{3, ell};
    const auto cover = whitney_cover(dom, Box::centered(3, 1.0), 7);
    EXPECT_EQ(cover.certificate_violations(), 0u);
    // every cube satisfies c1 2^-j <= dist(2Q, S)
    for (const auto& c : cover.cubes())
      EXPECT_LE(cover.c1() * c.cube.side(), box_distance_to_singular_set(c.cube.doubled(3), dom) + 1e-15);
    EXPECT_NEAR(cover.covered_volume() + cover.collar_volume(), 8.0, 1e-9);
  }
}

TEST(Whitney, LevelGrowthApproachesSingularDimension) {
  for (int ell : {0, 1}) {
    const auto cover = whitney_cover(ModelDomain{3, ell}, Box::centered(3, 1.0), 9);
    const double rate = std::log2(static_cast<double>(cover.count(9)) / static_cast<double>(cover.count(8)));
    EXPECT_NEAR(rate, ell, 0.2) << "ell=" << ell;
  }
}

TEST(Whitney, FindAndJsonSchema) {
  const auto cover = whitney_cover(ModelDomain{2, 0}, Box::centered(2, 0.5), 6);
  for (std::size_t i = 0; i < cover.cubes().size(); i += 7) EXPECT_EQ(cover.find(cover.cubes()[i].cube), static_cast<int>(i));
  EXPECT_NE(cover.to_json().find("klab-whitney/1"), std::string::npos);
}

TEST(Partition, SumsToOneOnCoveredRegion) {
  const auto cover = whitney_cover(ModelDomain{2, 0}, Box::centered(2, 1.0), 10);
  const PartitionOfUnity pou(cover);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  int checked = 0;
  double worst = 0.0;
  while (checked < 2000) {
    const Point x{u(rng), u(rng), 0.0};
    if (std::hypot(x[0], x[1]) < 0.01) continue;
    worst = std::max(worst, std::abs(pou.sum(x) - 1.0));
    ++checked;
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Partition, PieceSupportedInDoubledCube) {
  const auto cover = whitney_cover(ModelDomain{2, 0}, Box::centered(2, 1.0), 6);
  const PartitionOfUnity pou(cover);
  const int idx = static_cast<int>(cover.cubes().size() / 2);
  const Box b = cover.cubes()[idx].cube.doubled(2);
  const Point outside{b.hi[0] + 1e-3, b.hi[1] + 1e-3, 0.0};
  EXPECT_EQ(pou.value(idx, outside), 0.0);
  // derivatives of the sum vanish
  const Point x{0.3, -0.41, 0.0};
  Jet s(2, 2);
  for (const auto& t : pou.evaluate(x, 2)) s += t.jet;
  EXPECT_NEAR(s.value(), 1.0, 1e-12);
  EXPECT_NEAR(s.partial({1, 0, 0}), 0.0, 1e-9);
  EXPECT_NEAR(s.partial({1, 1, 0}), 0.0, 1e-7);
}

TEST(Whitney, RejectsNonDyadicBox) {
  Box b = Box::centered(2, 1.0);
  b.hi[0] = 0.3;
  EXPECT_THROW(whitney_cover(ModelDomain{2, 0}, b, 4), InvalidParams);
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/spherical.hpp"

using namespace sphflex;

namespace {

SpherePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return SpherePoint::normalized(Vec3(n(rng), n(rng), n(rng)));
}

Rotation random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  return rotation_about_axis(random_point(rng), u(rng));
}

SphericalRealization random_realization(std::mt19937_64& rng, int n) {
  SphericalRealization r;
  for (int v = 1; v <= n; ++v) r.set(v, random_point(rng));
  return r;
}

}  // namespace

TEST(SpherePoint, RejectsNonUnit) {
  EXPECT_ERROR_CODE(SpherePoint(1.0, 1.0, 0.0), ErrorCode::DomainViolation);
  EXPECT_NO_THROW(SpherePoint(0.6, 0.8, 0.0));
}

TEST(Delta, Examples) {
  SpherePoint t(1, 0, 0);
  SpherePoint u(0, 1, 0);
  EXPECT_DOUBLE_EQ(delta(t, t), 1.0);
  EXPECT_DOUBLE_EQ(delta(t, t.antipode()), -1.0);
  EXPECT_DOUBLE_EQ(delta(t, u), 0.0);
}

TEST(SphDist, Examples) {
  SpherePoint t(0, 0, 1);
  EXPECT_DOUBLE_EQ(sph_dist(t, t), 0.0);
  EXPECT_DOUBLE_EQ(sph_dist(t, t.antipode()), 1.0);
  EXPECT_DOUBLE_EQ(sph_dist(t, SpherePoint(1, 0, 0)), 0.5);
}

TEST(Delta, IdentitiesOnRandomPoints) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    SpherePoint a = random_point(rng);
    SpherePoint b = random_point(rng);
    EXPECT_NEAR(sph_dist(a, b), (1.0 - delta(a, b)) / 2.0, 1e-15);
    EXPECT_NEAR(delta(a, b.antipode()), -delta(a, b), 1e-12);
  }
}

TEST(Lengths, LambdaDeltaEncoding) {
  auto lam = LengthAssignment::from_delta({{VertexPair::make(1, 2), 0.3}});
  EXPECT_NEAR(lam.lambda(1, 2), 0.35, 1e-15);
  EXPECT_NEAR(lam.delta(2, 1), 0.3, 1e-15);
  EXPECT_ERROR_CODE(LengthAssignment::from_lambda({{VertexPair::make(1, 2), 0.0}}), ErrorCode::DomainViolation);
  EXPECT_ERROR_CODE(LengthAssignment::from_lambda({{VertexPair::make(1, 2), 1.0}}), ErrorCode::DomainViolation);
}

TEST(Compatible, InducedAndPerturbed) {
  std::mt19937_64 rng(3);
  Graph g = corpus::k33();
  auto rho = random_realization(rng, 6);
  auto lam = LengthAssignment::induced(g, rho);
  EXPECT_TRUE(is_compatible(g, rho, lam, 1e-12));
  auto moved = rho;
  moved.set(1, SpherePoint::normalized(rho.at(1).vec() + Vec3(1e-3, 0, 0)));
  EXPECT_FALSE(is_compatible(g, moved, lam, 1e-9));
  auto d1 = dixon1_motion({}, {1.0, 1.1});
  EXPECT_TRUE(is_compatible(d1.graph, d1.samples[1].rho, d1.lengths, 1e-9));
}

TEST(Compatible, RotationInvariant) {
  std::mt19937_64 rng(5);
  Graph g = corpus::k33();
  for (int k = 0; k < 100; ++k) {
    auto rho = random_realization(rng, 6);
    auto lam = LengthAssignment::induced(g, random_realization(rng, 6));
    auto r = random_rotation(rng);
    EXPECT_EQ(is_compatible(g, rho, lam), is_compatible(g, apply_rotation(r, rho), lam));
    auto lam2 = LengthAssignment::induced(g, rho);
    EXPECT_TRUE(is_compatible(g, apply_rotation(r, rho), lam2));
  }
}

TEST(Rotation, Examples) {
  SphericalRealization rho;
  rho.set(1, SpherePoint(1, 0, 0));
  auto same = apply_rotation(Rotation(), rho);
  EXPECT_NEAR((same.at(1).vec() - rho.at(1).vec()).norm(), 0.0, 1e-15);
  auto turned = apply_rotation(rotation_about_axis(SpherePoint(0, 0, 1), M_PI), rho);
  EXPECT_NEAR((turned.at(1).vec() - Vec3(-1, 0, 0)).norm(), 0.0, 1e-12);
  auto y = rotation_about_axis(SpherePoint(1, 0, 0), M_PI).apply(SpherePoint(0, 1, 0));
  EXPECT_NEAR((y.vec() - Vec3(0, -1, 0)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((rotation_about_axis(SpherePoint(0, 1, 0), 0.0).matrix() - Eigen::Matrix3d::Identity()).norm(),
              0.0, 1e-15);
  EXPECT_ERROR_CODE(Rotation(Eigen::Vector3d(1, 1, -1).asDiagonal().toDenseMatrix()), ErrorCode::DomainViolation);
}

TEST(Rotation, AnglesAddAboutOneAxis) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    SpherePoint axis = random_point(rng);
    double a = 0.37 * k;
    double b = 1.1 - 0.05 * k;
    auto lhs = rotation_about_axis(axis, a) * rotation_about_axis(axis, b);
    EXPECT_NEAR((lhs.matrix() - rotation_about_axis(axis, a + b).matrix()).norm(), 0.0, 1e-12);
  }
}

TEST(Rotation, PreservesAllDeltas) {
  std::mt19937_64 rng(13);
  auto rho = random_realization(rng, 8);
  auto r = random_rotation(rng);
  EXPECT_LT((gram_matrix(rho) - gram_matrix(apply_rotation(r, rho))).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EssentiallyDistinct, Examples) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    auto rho = random_realization(rng, 5);
    EXPECT_FALSE(essentially_distinct(rho, apply_rotation(random_rotation(rng), rho)));
    SphericalRealization mirror;
    for (const auto& [v, p] : rho.placement()) mirror.set(v, SpherePoint(p.x(), p.y(), -p.z()));
    auto rep = compare_realizations(rho, mirror);
    EXPECT_TRUE(rep.distinct);
    EXPECT_TRUE(rep.orientation_checked);
    EXPECT_LT(rep.gram_distance, 1e-12);
  }
}

TEST(EssentiallyDistinct, ConsecutiveCdaSamples) {
  CdaParams p;
  EXPECT_TRUE(essentially_distinct(cda_realization(p, 8.0), cda_realization(p, 9.0)));
}

TEST(EssentiallyDistinct, PlanarConfigurationsFallBackToGram) {
  SphericalRealization a;
  a.set(1, SpherePoint(1, 0, 0));
  a.set(2, SpherePoint(0, 1, 0));
  auto rep = compare_realizations(a, a);
  EXPECT_FALSE(rep.distinct);
  EXPECT_FALSE(rep.orientation_checked);
}

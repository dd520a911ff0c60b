#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "sphflex/continuation.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/tables.hpp"

using namespace sphflex;

namespace {

const GaugeFix kCdaGauge{1, 6, 2};

MotionTrajectory cda_reference() { return cda_motion({}, evenly_spaced(7.5, 40.0, 50)); }

SphericalRealization cda_seed(double t = 8.0) { return regauge(cda_realization({}, t), kCdaGauge); }

LengthAssignment cda_lengths() { return LengthAssignment::from_delta(cda_deltas({})); }

SpherePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return SpherePoint::normalized(Vec3(n(rng), n(rng), n(rng)));
}

// Solutions of <x,n2> = d2 along the circle <x,n1> = d1, by sign changes on a fine grid.
int dense_root_count(const Vec3& n1, double d1, const Vec3& n2, double d2) {
  if (std::abs(d1) >= 1) return 0;
  Vec3 u = n1.unitOrthogonal();
  Vec3 v = n1.cross(u);
  double r = std::sqrt(1 - d1 * d1);
  const int steps = 20000;
  auto f = [&](double th) { return (d1 * n1 + r * (std::cos(th) * u + std::sin(th) * v)).dot(n2) - d2; };
  int roots = 0;
  double prev = f(0);
  for (int k = 1; k <= steps; ++k) {
    double cur = f(2 * M_PI * k / steps);
    if ((prev < 0) != (cur < 0)) ++roots;
    prev = cur;
  }
  return roots;
}

}  // namespace

TEST(Residual, ZeroOnGaugedCompatibleSample) {
  Graph g = corpus::k33();
  auto r = residual(g, cda_lengths(), cda_seed(), kCdaGauge);
  EXPECT_EQ(r.size(), 18);
  EXPECT_LT(r.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(jacobian(g, pack(g, cda_seed()), kCdaGauge).rows(), 18);
  EXPECT_EQ(jacobian(g, pack(g, cda_seed()), kCdaGauge).cols(), 18);
}

TEST(Residual, PerturbationTouchesOnlyIncidentEntries) {
  Graph g = corpus::k33();
  auto x = pack(g, cda_seed());
  const int v5 = g.index_of(5);
  x(3 * v5 + 1) += 1e-3;
  auto r = residual(g, cda_lengths(), x, kCdaGauge);
  for (int k = 0; k < r.size(); ++k) {
    bool affected = k == v5;
    if (k >= 6 && k < 15) {
      const auto& e = g.edges()[k - 6];
      affected = e.a == 5 || e.b == 5;
    }
    if (affected) EXPECT_GT(std::abs(r(k)), 1e-6) << k;
    else EXPECT_LT(std::abs(r(k)), 1e-12) << k;
  }
}

TEST(Corank, OneOnTheCdaCurve) {
  EXPECT_EQ(corank(corpus::k33(), cda_seed(), kCdaGauge), 1);
  for (double t : {10.0, 20.0, 35.0}) EXPECT_EQ(corank(corpus::k33(), cda_seed(t), kCdaGauge), 1);
}

TEST(Regauge, PinsAnchorAndMeridian) {
  std::mt19937_64 rng(3);
  SphericalRealization rho;
  for (int v = 1; v <= 4; ++v) rho.set(v, random_point(rng));
  auto r = regauge(rho, {2, 4, 1});
  EXPECT_NEAR((r.at(2).vec() - Vec3(1, 0, 0)).norm(), 0.0, 1e-12);
  EXPECT_NEAR(r.at(4).y(), 0.0, 1e-12);
  EXPECT_LT((gram_matrix(r) - gram_matrix(rho)).cwiseAbs().maxCoeff(), 1e-12);
  SphericalRealization bad;
  bad.set(1, SpherePoint(1, 0, 0));
  bad.set(2, SpherePoint(-1, 0, 0));
  EXPECT_ERROR_CODE(regauge(bad, {1, 2, 2}), ErrorCode::DegenerateAxis);
  EXPECT_ERROR_CODE(regauge(rho, {1, 1, 2}), ErrorCode::DegenerateAxis);
}

TEST(Trace, CdaKeepsDiagonalAngle) {
  TraceConfig cfg;
  cfg.max_steps = 300;
  auto res = trace(corpus::k33(), cda_lengths(), cda_seed(), kCdaGauge, cfg);
  ASSERT_GT(res.trajectory.samples.size(), 10u);
  for (const auto& s : res.trajectory.samples) {
    EXPECT_NEAR(delta(s.rho.at(5), s.rho.at(6)), 0.75, 1e-8);
    EXPECT_LE(max_edge_residual(corpus::k33(), s.rho, cda_lengths()), cfg.newton_tol * 10);
  }
  for (std::size_t k = 1; k < res.tangents.size(); ++k) EXPECT_GT(res.tangents[k - 1].dot(res.tangents[k]), 0.0);
}

TEST(Trace, CdaLoopCloses) {
  auto res = trace(corpus::k33(), cda_lengths(), cda_seed(), kCdaGauge);
  EXPECT_EQ(res.stop, StopReason::loop_closed);
  EXPECT_GT(res.arclength, 0.1);
  EXPECT_EQ(detect_k33_motion_kind(res.trajectory), MotionKind::const_diag_angle);
}

TEST(Trace, GaugeInvariance) {
  TraceConfig cfg;
  cfg.max_steps = 60;
  auto a = trace(corpus::k33(), cda_lengths(), cda_seed(), kCdaGauge, cfg);
  auto turned = apply_rotation(rotation_about_axis(SpherePoint::normalized(Vec3(1, 2, 3)), 0.7), cda_seed());
  auto b = trace(corpus::k33(), cda_lengths(), turned, kCdaGauge, cfg);
  ASSERT_EQ(a.trajectory.samples.size(), b.trajectory.samples.size());
  for (std::size_t k = 0; k < a.trajectory.samples.size(); ++k)
    EXPECT_LT((gram_matrix(a.trajectory.samples[k].rho) - gram_matrix(b.trajectory.samples[k].rho))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-7);
}

TEST(Trace, Dixon1StaysOnItsCircles) {
  auto d = dixon1_motion({}, {1.0, 1.1});
  TraceConfig cfg;
  cfg.max_steps = 150;
  auto res = trace(d.graph, d.lengths, d.samples[0].rho, {1, 3, 1}, cfg);
  ASSERT_GT(res.trajectory.samples.size(), 10u);
  for (const auto& s : res.trajectory.samples)
    for (Vertex v : {1, 3, 5}) EXPECT_NEAR(s.rho.at(v).y(), 0.0, 1e-8);
}

TEST(Trace, TriangleIsRigid) {
  Graph g = corpus::triangle();
  SphericalRealization rho;
  rho.set(1, SpherePoint(1, 0, 0));
  rho.set(2, SpherePoint::normalized(Vec3(0.3, 1, 0)));
  rho.set(3, SpherePoint::normalized(Vec3(0.2, 0.4, 1)));
  EXPECT_ERROR_CODE(trace(g, LengthAssignment::induced(g, rho), rho, default_gauge(g, rho)),
                    ErrorCode::RankDeficient);
}

TEST(Trace, SeedOffCurve) {
  auto seed = cda_seed();
  seed.set(5, SpherePoint::normalized(seed.at(5).vec() + Vec3(0, 0, 0.01)));
  EXPECT_ERROR_CODE(trace(corpus::k33(), cda_lengths(), seed, kCdaGauge), ErrorCode::SeedNotOnCurve);
  SphericalRealization partial;
  partial.set(1, SpherePoint(1, 0, 0));
  EXPECT_ERROR_CODE(trace(corpus::k33(), cda_lengths(), partial, kCdaGauge), ErrorCode::SeedNotOnCurve);
}

TEST(Trace, ConfigValidation) {
  TraceConfig cfg;
  cfg.step_size = -1;
  EXPECT_ERROR_CODE(validate(cfg), ErrorCode::OutOfRange);
  cfg = {};
  cfg.newton_tol = 1e-15;
  EXPECT_ERROR_CODE(validate(cfg), ErrorCode::OutOfRange);
  EXPECT_NO_THROW(validate(TraceConfig{}));
}

TEST(CircleIntersection, AgreesWithDenseRootFinding) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  int mismatches = 0;
  for (int k = 0; k < 1000; ++k) {
    Vec3 n1 = random_point(rng).vec();
    Vec3 n2 = random_point(rng).vec();
    double d1 = u(rng);
    double d2 = u(rng);
    mismatches += static_cast<int>(circle_intersection(n1, d1, n2, d2).size()) != dense_root_count(n1, d1, n2, d2);
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(FiberCount, Examples) {
  Graph g = corpus::k22();
  SphericalRealization partial;
  partial.set(2, SpherePoint(1, 0, 0));
  partial.set(4, SpherePoint(0, 1, 0));
  partial.set(1, SpherePoint(0, 0, 1));
  auto lam = LengthAssignment::from_delta({{VertexPair::make(1, 2), 0.0}, {VertexPair::make(1, 4), 0.0},
                                           {VertexPair::make(2, 3), 0.3}, {VertexPair::make(3, 4), 0.4}});
  EXPECT_EQ(fiber_count(g, lam, partial, 3), 2);
  double c = std::sqrt(0.5);
  auto tangent = LengthAssignment::from_delta({{VertexPair::make(1, 2), 0.0}, {VertexPair::make(1, 4), 0.0},
                                               {VertexPair::make(2, 3), c}, {VertexPair::make(3, 4), c}});
  EXPECT_EQ(fiber_count(g, tangent, partial, 3), 1);
  auto none = LengthAssignment::from_delta({{VertexPair::make(1, 2), 0.0}, {VertexPair::make(1, 4), 0.0},
                                            {VertexPair::make(2, 3), 0.9}, {VertexPair::make(3, 4), 0.9}});
  EXPECT_EQ(fiber_count(g, none, partial, 3), 0);
  SphericalRealization one;
  one.set(2, SpherePoint(1, 0, 0));
  EXPECT_ERROR_CODE(fiber_count(g, lam, one, 3), ErrorCode::UnderConstrained);
}

TEST(MapDegree, Dixon1ForgetFiveSix) {
  auto d = dixon1_motion({}, evenly_spaced(0.9, 1.3, 8));
  EXPECT_EQ(empirical_map_degree(d, {5, 6}), 4);
  EXPECT_EQ(empirical_map_degree(d, {}), 1);
}

TEST(MapDegree, CdaTableIsCaseFour) {
  auto traj = cda_reference();
  DegreeTable dt;
  for (Vertex k : {1, 3, 5})
    for (Vertex l : {2, 4, 6}) dt.deg[k / 2][l / 2 - 1] = empirical_map_degree(traj, {k, l}, 8);
  EXPECT_EQ(dt.deg[2][2], 2);
  EXPECT_EQ(canonical_degree_table(dt), canonical_degree_table(reference_cases()[3].degrees)) << dt.to_string();
}

TEST(MapDegree, Errors) {
  MotionTrajectory empty;
  EXPECT_ERROR_CODE(empirical_map_degree(empty, {1}), ErrorCode::InsufficientSamples);
}

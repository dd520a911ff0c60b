#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "expect_error.hpp"
#include "sphflex/corpus.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/quad.hpp"

using namespace sphflex;

namespace {

EdgeColoring row_coloring() {
  Graph g = corpus::k33();
  std::vector<Color> cs;
  for (const auto& e : g.edges()) cs.push_back(e.a == 1 ? Color::red : Color::blue);
  return EdgeColoring(g, cs);
}

void expect_all_compatible(const MotionTrajectory& t, double tol) {
  for (const auto& s : t.samples) EXPECT_TRUE(is_compatible(t.graph, s.rho, t.lengths, tol)) << s.parameter;
}

// Placements written out for a = 3/5, e = 3/4, one per sign pair.
std::vector<SphericalRealization> example_placements(double t) {
  std::vector<SphericalRealization> out;
  const double a = 0.6;
  const double e = 0.75;
  for (int s2 : {1, -1})
    for (int s5 : {1, -1}) {
      double rad2 = (t + 7) * (7 * t + 1);
      if (rad2 < 0) continue;
      double y2 = s2 * std::sqrt(rad2) / (5 * t + 5);
      double rad5 = 25 * std::pow(t, 4) * y2 * y2 - 50 * t * t * y2 * y2 - 72 * std::pow(t, 3) + 25 * y2 * y2 - 72 * t;
      if (rad5 < 0) continue;
      double z5 = (-5 * y2 * t * t + 5 * y2 + s5 * std::sqrt(rad5)) / (8 * (t * t + 1));
      double x5 = t * (16 * z5 * z5 + 9) / (8 * z5 * (t * t - 1));
      double y4 = y2 + 8 * (t * t + 1) * z5 / (5 * (t * t - 1));
      double z2 = 0.6 * (t - 1) / (t + 1);
      double z4 = -0.6 * (t + 1) / (t - 1);
      std::map<Vertex, SpherePoint> m;
      try {
        m[1] = SpherePoint(1, 0, 0);
        m[2] = SpherePoint::normalized(Vec3(a, y2, z2));
        m[3] = SpherePoint(2 * t / (t * t + 1), 0, (t * t - 1) / (t * t + 1));
        m[4] = SpherePoint::normalized(Vec3(a, y4, z4));
        m[5] = SpherePoint::normalized(Vec3(x5, e, z5));
        m[6] = SpherePoint(0, 1, 0);
      } catch (const Error&) {
        continue;
      }
      out.emplace_back(m);
    }
  return out;
}

double coordinate_gap(const SphericalRealization& r1, const SphericalRealization& r2) {
  double gap = 0;
  for (const auto& [v, p] : r1.placement()) gap = std::max(gap, (p.vec() - r2.at(v).vec()).norm());
  return gap;
}

}  // namespace

TEST(PolarNap, RowColoringOnK33) {
  auto t = polar_nap_motion(corpus::k33(), row_coloring(), {0.0, M_PI / 7, M_PI / 3});
  ASSERT_EQ(t.samples.size(), 3u);
  EXPECT_EQ(t.kind, MotionKind::polar_nap);
  expect_all_compatible(t, 1e-12);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_TRUE(essentially_distinct(t.samples[i].rho, t.samples[j].rho));
}

TEST(PolarNap, PolesOnTheAxis) {
  auto c = row_coloring();
  auto parts = nap_pole_partition(c);
  auto t = polar_nap_motion(corpus::k33(), c, {0.3, 0.9});
  for (const auto& s : t.samples)
    for (Vertex v : parts.poles) EXPECT_NEAR(std::abs(s.rho.at(v).x()), 1.0, 1e-15);
}

TEST(PolarNap, SouthPolesCanIdentifyVertices) {
  auto c = corpus::nap254_figure_coloring();
  auto north = polar_nap_motion(corpus::nap254(), c, {0.1, 0.5});
  EXPECT_EQ(north.non_injective_samples(), 2u);
  auto mixed = polar_nap_motion(corpus::nap254(), c, {0.1, 0.5}, kDefaultSeed, {{1, -1}});
  EXPECT_EQ(mixed.non_injective_samples(), 0u);
  expect_all_compatible(mixed, 1e-12);
}

TEST(PolarNap, AllEdgesConstantOnEveryNapColoring) {
  for (const auto& [name, g] : corpus::named_graphs())
    for (const auto& c : enumerate_nap(g, true).colorings) {
      auto t = polar_nap_motion(g, c, evenly_spaced(0.0, 2.0, 12));
      EXPECT_LE(t.max_residual(), 1e-12) << name;
    }
}

TEST(PolarNap, Errors) {
  Graph g = corpus::k33();
  std::vector<Color> cs(g.num_edges(), Color::red);
  cs[0] = Color::blue;
  EXPECT_ERROR_CODE(polar_nap_motion(g, EdgeColoring(g, cs), {0.0, 1.0}), ErrorCode::NotNap);
  EXPECT_ERROR_CODE(polar_nap_motion(g, row_coloring(), {}), ErrorCode::OutOfRange);
  EXPECT_ERROR_CODE(polar_nap_motion(g, row_coloring(), {0.0, 0.0}), ErrorCode::DegenerateMotion);
}

TEST(Dixon1, ConstantDeltaMatrix) {
  Dixon1Params p;
  auto t = dixon1_motion(p, {1.0, 1.1, 1.2});
  expect_all_compatible(t, 1e-12);
  for (const auto& s : t.samples) {
    for (Vertex i : {1, 3, 5}) {
      EXPECT_EQ(s.rho.at(i).y(), 0.0);
      for (Vertex j : {2, 4, 6})
        EXPECT_NEAR(delta(s.rho.at(i), s.rho.at(j)), p.c[i / 2] * p.d[j / 2 - 1], 1e-12);
    }
    for (Vertex j : {2, 4, 6}) EXPECT_EQ(s.rho.at(j).x(), 0.0);
  }
  EXPECT_EQ(detect_k33_motion_kind(t), MotionKind::dixon1);
}

TEST(Dixon1, NoRhomboidSubquads) {
  auto t = dixon1_motion({}, evenly_spaced(0.8, 1.4, 20));
  for (Vertex k : {1, 3, 5})
    for (Vertex l : {2, 4, 6}) {
      auto q = k33_quad(k, l);
      EXPECT_NE(classify(quad_lengths(t.lengths, q.cycle)).tag, QuadTag::rhomboid);
    }
}

TEST(Dixon1, DomainViolation) {
  EXPECT_ERROR_CODE(dixon1_motion({}, {0.0, 1.0}), ErrorCode::DomainViolation);
  EXPECT_ERROR_CODE(dixon1_motion({}, {2.0, 1.0}), ErrorCode::DomainViolation);
  EXPECT_ERROR_CODE(dixon1_motion({}, {0.5, 1.0}), ErrorCode::DomainViolation);
}

TEST(Dixon2, SolveMeetsProductConstraints) {
  Dixon2Params p;
  for (double p1 : {0.5, 0.55, 0.6})
    for (int root : {0, 1}) {
      auto s = dixon2_solve(p, p1, root);
      EXPECT_NEAR(s.p.norm(), 1.0, 1e-12);
      EXPECT_NEAR(s.q.norm(), 1.0, 1e-12);
      EXPECT_NEAR(s.p.x(), p1, 1e-15);
      EXPECT_NEAR(s.p.x() * s.q.x(), p.alpha, 1e-12);
      EXPECT_NEAR(s.p.y() * s.q.y(), p.beta, 1e-12);
      EXPECT_NEAR(s.p.z() * s.q.z(), p.gamma, 1e-12);
    }
}

TEST(Dixon2, K44AndK33) {
  Dixon2Params p;
  auto k44 = dixon2_motion(p, {0.5, 0.55, 0.6});
  EXPECT_EQ(k44.graph.num_edges(), 16u);
  expect_all_compatible(k44, 1e-12);
  EXPECT_LE(dixon2_involution_defect(k44), 1e-12);
  auto k33 = drop_vertices(k44, {7, 8});
  EXPECT_EQ(k33.graph, corpus::k33());
  expect_all_compatible(k33, 1e-12);
  EXPECT_EQ(detect_k33_motion_kind(k33), MotionKind::dixon2);
}

TEST(Dixon2, Errors) {
  EXPECT_ERROR_CODE(dixon2_solve({}, 0.05), ErrorCode::NoRealSolution);
  EXPECT_ERROR_CODE(dixon2_solve({0.2, 0.0, 0.1}, 0.5), ErrorCode::DegenerateAxis);
}

TEST(CdaParams, FromE) {
  auto p = cda_params_from_e(0.75);
  EXPECT_NEAR(p.a, 0.6, 1e-15);
  EXPECT_NEAR(cda_relation(p.a, p.e), 0.0, 1e-12);
  EXPECT_ERROR_CODE(cda_params_from_e(0.0), ErrorCode::OutOfRange);
  EXPECT_ERROR_CODE(cda_params_from_e(1.0), ErrorCode::OutOfRange);
  EXPECT_EQ(cda_relation_exact(3, 5, 3, 4), (std::pair<long long, long long>{0, 1}));
  EXPECT_NE(cda_relation_exact(1, 2, 3, 4).first, 0);
  for (double e : {-0.9, -0.2, 0.1, 0.5, 0.95}) {
    auto q = cda_params_from_e(e);
    EXPECT_NEAR(cda_relation(q.a, q.e), 0.0, 1e-12);
    EXPECT_GT(std::abs(std::abs(q.e) - std::abs(q.a)), 0.0);
  }
  EXPECT_ERROR_CODE(validate_cda_params({0.5, 0.75}), ErrorCode::OutOfRange);
}

TEST(Cda, MatchesWrittenFormulasAtThreeFifths) {
  CdaParams p;
  int compared = 0;
  for (double t : evenly_spaced(7.5, 40.0, 30)) {
    auto reference = example_placements(t);
    for (int s2 : {1, -1})
      for (int s5 : {1, -1}) {
        SphericalRealization rho;
        try {
          rho = cda_realization(p, t, {s2, s5});
        } catch (const Error&) {
          continue;
        }
        double best = 1e9;
        for (const auto& r : reference) best = std::min(best, coordinate_gap(rho, r));
        EXPECT_LT(best, 1e-9) << "t=" << t;
        ++compared;
      }
  }
  EXPECT_GT(compared, 30);
}

TEST(Cda, TrajectoryInvariants) {
  CdaParams p;
  auto t = cda_motion(p, evenly_spaced(7.5, 40.0, 50));
  EXPECT_LE(t.max_residual(), 1e-9);
  for (const auto& s : t.samples) {
    EXPECT_NEAR(delta(s.rho.at(5), s.rho.at(6)), p.e, 1e-9);
    EXPECT_NEAR(delta(s.rho.at(5), s.rho.at(2)), 0.0, 1e-9);
    EXPECT_NEAR(delta(s.rho.at(5), s.rho.at(4)), 0.0, 1e-9);
    EXPECT_NEAR(delta(s.rho.at(6), s.rho.at(1)), 0.0, 1e-12);
    EXPECT_NEAR(delta(s.rho.at(6), s.rho.at(3)), 0.0, 1e-12);
  }
  for (std::size_t k = 1; k < t.samples.size(); ++k)
    EXPECT_TRUE(essentially_distinct(t.samples[k - 1].rho, t.samples[k].rho));
  EXPECT_EQ(detect_k33_motion_kind(t), MotionKind::const_diag_angle);
}

TEST(Cda, SubquadTypes) {
  auto lam = LengthAssignment::from_delta(cda_deltas({}));
  EXPECT_EQ(classify(quad_lengths(lam, k33_quad(5, 6).cycle)).tag, QuadTag::general);
  EXPECT_EQ(classify(quad_lengths(lam, k33_quad(1, 6).cycle)).tag, QuadTag::even_deltoid);
  EXPECT_EQ(classify(quad_lengths(lam, k33_quad(3, 6).cycle)).tag, QuadTag::even_deltoid);
}

TEST(Cda, OtherParametersOnTheCurve) {
  for (double e : {0.5, 0.9, -0.6}) {
    auto p = cda_params_from_e(e);
    auto iv = cda_feasible_intervals(p);
    ASSERT_FALSE(iv.empty()) << e;
    std::vector<double> ts;
    for (const auto& i : iv) {
      if (i.hi - i.lo < 1e-3) continue;
      for (double t : evenly_spaced(i.lo + 0.25 * (i.hi - i.lo), i.hi - 0.25 * (i.hi - i.lo), 5)) ts.push_back(t);
    }
    auto traj = cda_motion(p, ts);
    EXPECT_LE(traj.max_residual(), 1e-9) << e;
  }
}

TEST(Cda, FeasibleIntervalsAtThreeFifths) {
  auto iv = cda_feasible_intervals({});
  ASSERT_EQ(iv.size(), 4u);
  EXPECT_NEAR(iv[0].lo, -50.0, 1e-9);
  EXPECT_NEAR(iv[0].hi, -7.0, 1e-6);
  EXPECT_NEAR(iv[1].lo, -1.0 / 7.0, 1e-6);
  EXPECT_NEAR(iv[2].hi, 1.0 / 7.0, 1e-6);
  EXPECT_NEAR(iv[3].lo, 7.0, 1e-6);
}

TEST(Cda, Errors) {
  CdaParams p;
  EXPECT_ERROR_CODE(cda_realization(p, 1.0), ErrorCode::PoleT);
  EXPECT_ERROR_CODE(cda_realization(p, -1.0), ErrorCode::PoleT);
  EXPECT_ERROR_CODE(cda_realization(p, 0.0), ErrorCode::PoleT);
  EXPECT_ERROR_CODE(cda_realization(p, 2.0), ErrorCode::NegativeDiscriminant);
  EXPECT_ERROR_CODE(cda_realization(p, -3.0), ErrorCode::NegativeDiscriminant);
}

TEST(Detect, RejectsShortOrDegenerateInput) {
  auto t = dixon1_motion({}, {1.0, 1.1});
  EXPECT_ERROR_CODE(detect_k33_motion_kind(t), ErrorCode::InsufficientSamples);
  // The three poles of the row coloring share the North pole.
  auto polar = polar_nap_motion(corpus::k33(), row_coloring(), evenly_spaced(0.1, 1.0, 5));
  EXPECT_ERROR_CODE(detect_k33_motion_kind(polar), ErrorCode::DegenerateRealization);
}

TEST(Trajectory, SampleFlags) {
  MotionSample s;
  s.rho.set(1, SpherePoint(1, 0, 0));
  s.rho.set(2, SpherePoint(-1, 0, 0));
  mark_degeneracies(s);
  EXPECT_TRUE(s.injective);
  EXPECT_FALSE(s.antipodal_free);
  s.rho.set(2, SpherePoint(1, 0, 0));
  mark_degeneracies(s);
  EXPECT_FALSE(s.injective);
  EXPECT_EQ(evenly_spaced(0, 1, 3), (std::vector<double>{0.0, 0.5, 1.0}));
}

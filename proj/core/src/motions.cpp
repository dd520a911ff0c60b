#include "sphflex/motions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/rational.hpp>

#include "sphflex/corpus.hpp"
#include "sphflex/error.hpp"

namespace sphflex {

std::string_view to_string(MotionKind k) {
  switch (k) {
    case MotionKind::polar_nap: return "polar_nap";
    case MotionKind::dixon1: return "dixon1";
    case MotionKind::dixon2: return "dixon2";
    case MotionKind::const_diag_angle: return "const_diag_angle";
    case MotionKind::traced: return "traced";
    case MotionKind::unclassified: return "unclassified";
  }
  return "unclassified";
}

double MotionTrajectory::max_residual() const {
  double r = 0.0;
  for (const auto& s : samples) r = std::max(r, max_edge_residual(graph, s.rho, lengths));
  return r;
}

std::size_t MotionTrajectory::non_injective_samples() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const MotionSample& s) { return !s.injective; }));
}

void mark_degeneracies(MotionSample& s, double tol) {
  s.injective = true;
  s.antipodal_free = true;
  const auto& pl = s.rho.placement();
  for (auto i = pl.begin(); i != pl.end(); ++i)
    for (auto j = std::next(i); j != pl.end(); ++j) {
      double d = delta(i->second, j->second);
      if (d > 1.0 - tol) s.injective = false;
      if (d < -1.0 + tol) s.antipodal_free = false;
    }
}

namespace {

void require_some_motion(const MotionTrajectory& t) {
  if (t.samples.size() < 2) return;
  for (std::size_t k = 1; k < t.samples.size(); ++k)
    if (essentially_distinct(t.samples.front().rho, t.samples[k].rho)) return;
  fail(ErrorCode::DegenerateMotion, "all samples are the same realization up to rotation");
}

MotionSample make_sample(double parameter, SphericalRealization rho) {
  MotionSample s{parameter, std::move(rho)};
  mark_degeneracies(s);
  return s;
}

}  // namespace

MotionTrajectory polar_nap_motion(const Graph& g, const EdgeColoring& c,
                                  const std::vector<double>& angles, std::uint64_t seed,
                                  const std::map<Vertex, int>& pole_sides) {
  if (!(c.graph() == g)) fail(ErrorCode::NotNap, "coloring belongs to a different graph");
  if (angles.empty()) fail(ErrorCode::OutOfRange, "need at least one angle");
  PolePartition part = nap_pole_partition(c);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto generic = [&] {
    for (;;) {
      Vec3 v(gauss(rng), gauss(rng), gauss(rng));
      // Keep clear of the poles so no edge degenerates.
      if (v.norm() > 1e-3 && std::abs(v.normalized().x()) < 0.95) return SpherePoint::normalized(v);
    }
  };

  SphericalRealization base;
  for (Vertex v : part.poles) {
    auto it = pole_sides.find(v);
    int side = it == pole_sides.end() ? 1 : it->second;
    base.set(v, SpherePoint(side >= 0 ? 1.0 : -1.0, 0.0, 0.0));
  }
  for (Vertex v : part.red_side) base.set(v, generic());
  for (Vertex v : part.blue_side) base.set(v, generic());

  MotionTrajectory traj;
  traj.graph = g;
  traj.kind = MotionKind::polar_nap;
  traj.lengths = LengthAssignment::induced(g, base);
  const SpherePoint axis(1.0, 0.0, 0.0);
  for (double angle : angles) {
    Rotation r = rotation_about_axis(axis, angle);
    SphericalRealization rho = base;
    for (Vertex v : part.blue_side) rho.set(v, r.apply(base.at(v)));
    traj.samples.push_back(make_sample(angle, std::move(rho)));
  }
  require_some_motion(traj);
  return traj;
}

std::vector<double> evenly_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 1) return {lo};
  for (std::size_t k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * double(k) / double(n - 1));
  return out;
}

MotionTrajectory dixon1_motion(const Dixon1Params& params, const std::vector<double>& s_values) {
  if (s_values.empty()) fail(ErrorCode::OutOfRange, "need at least one parameter value");
  MotionTrajectory traj;
  traj.graph = corpus::k33();
  traj.kind = MotionKind::dixon1;
  std::map<VertexPair, double> deltas;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) deltas[VertexPair::make(2 * i + 1, 2 * j + 2)] = params.c[i] * params.d[j];
  traj.lengths = LengthAssignment::from_delta(deltas);
  for (double s : s_values) {
    if (s == 0.0) fail(ErrorCode::DomainViolation, "s must be nonzero");
    SphericalRealization rho;
    for (int i = 0; i < 3; ++i) {
      double z = params.c[i] * s;
      if (std::abs(z) > 1.0) fail(ErrorCode::DomainViolation, "|c_i s| exceeds 1");
      rho.set(2 * i + 1, SpherePoint::normalized(Vec3(std::sqrt(1.0 - z * z), 0.0, z)));
    }
    for (int j = 0; j < 3; ++j) {
      double z = params.d[j] / s;
      if (std::abs(z) > 1.0) fail(ErrorCode::DomainViolation, "|d_j / s| exceeds 1");
      rho.set(2 * j + 2, SpherePoint::normalized(Vec3(0.0, std::sqrt(1.0 - z * z), z)));
    }
    traj.samples.push_back(make_sample(s, std::move(rho)));
  }
  require_some_motion(traj);
  return traj;
}

Dixon2Point dixon2_solve(const Dixon2Params& params, double p1, int root) {
  const double a = params.alpha;
  const double b = params.beta;
  const double c = params.gamma;
  if (a == 0.0 || b == 0.0 || c == 0.0 || p1 == 0.0)
    fail(ErrorCode::DegenerateAxis, "a coordinate of p would vanish");
  if (std::abs(p1) >= 1.0) fail(ErrorCode::NoRealSolution, "p1 must lie in (-1, 1)");
  // u = p2^2 solves r u^2 + (c^2 - b^2 - r w) u + b^2 w = 0 with w = 1 - p1^2.
  const double w = 1.0 - p1 * p1;
  const double r = 1.0 - a * a / (p1 * p1);
  if (r <= 0.0) fail(ErrorCode::NoRealSolution, "alpha / p1 leaves no room on the sphere");
  const double B = c * c - b * b - r * w;
  const double disc = B * B - 4.0 * r * b * b * w;
  if (disc < 0.0) fail(ErrorCode::NoRealSolution, "no real p2 for this p1");
  const double sq = std::sqrt(disc);
  // Stable pair of roots.
  const double qv = -0.5 * (B + (B >= 0 ? sq : -sq));
  std::vector<double> roots{qv / r, b * b * w / qv};
  std::sort(roots.begin(), roots.end());
  std::vector<double> ok;
  for (double u : roots)
    if (u > 0.0 && u < w) ok.push_back(u);
  if (ok.empty()) fail(ErrorCode::NoRealSolution, "no admissible p2 for this p1");
  double u = ok[std::min<std::size_t>(static_cast<std::size_t>(std::max(root, 0)), ok.size() - 1)];
  Vec3 p(p1, std::sqrt(u), std::sqrt(w - u));
  Vec3 q(a / p.x(), b / p.y(), c / p.z());
  if (std::abs(q.squaredNorm() - 1.0) > 1e-9) fail(ErrorCode::NoRealSolution, "q is not a unit vector");
  return {p, q.normalized()};
}

MotionTrajectory dixon2_motion(const Dixon2Params& params, const std::vector<double>& p1_values,
                               int root) {
  if (p1_values.empty()) fail(ErrorCode::OutOfRange, "need at least one parameter value");
  const std::array<Eigen::Matrix3d, 4> klein{
      Eigen::Matrix3d::Identity(), Eigen::Vector3d(1, -1, -1).asDiagonal().toDenseMatrix(),
      Eigen::Vector3d(-1, -1, 1).asDiagonal().toDenseMatrix(),
      Eigen::Vector3d(-1, 1, -1).asDiagonal().toDenseMatrix()};
  MotionTrajectory traj;
  traj.graph = corpus::k44();
  traj.kind = MotionKind::dixon2;
  bool first = true;
  for (double p1 : p1_values) {
    Dixon2Point pq = dixon2_solve(params, p1, root);
    SphericalRealization rho;
    for (int k = 0; k < 4; ++k) {
      rho.set(2 * k + 1, SpherePoint::normalized(klein[k] * pq.p));
      rho.set(2 * k + 2, SpherePoint::normalized(klein[k] * pq.q));
    }
    if (first) {
      traj.lengths = LengthAssignment::induced(traj.graph, rho);
      first = false;
    }
    traj.samples.push_back(make_sample(p1, std::move(rho)));
  }
  require_some_motion(traj);
  return traj;
}

MotionTrajectory drop_vertices(const MotionTrajectory& traj, const std::vector<Vertex>& drop) {
  MotionTrajectory out;
  out.graph = remove_vertices(traj.graph, drop);
  out.lengths = traj.lengths.restricted(out.graph);
  out.kind = traj.kind;
  for (const auto& s : traj.samples) {
    SphericalRealization rho;
    for (Vertex v : out.graph.vertices()) rho.set(v, s.rho.at(v));
    out.samples.push_back(make_sample(s.parameter, std::move(rho)));
  }
  return out;
}

double dixon2_involution_defect(const MotionTrajectory& k44) {
  const Eigen::Matrix3d tau = Eigen::Vector3d(1, -1, -1).asDiagonal();
  const Eigen::Matrix3d sigma = Eigen::Vector3d(-1, 1, -1).asDiagonal();
  const Eigen::Matrix3d rho_m = Eigen::Vector3d(-1, -1, 1).asDiagonal();
  // Vertex permutations: tau swaps 1<->3, 5<->7; sigma 1<->7, 3<->5; rho 1<->5, 3<->7 (same on evens).
  const std::array<std::pair<const Eigen::Matrix3d*, std::array<int, 4>>, 3> perms{{
      {&tau, {1, 0, 3, 2}}, {&sigma, {3, 2, 1, 0}}, {&rho_m, {2, 3, 0, 1}}}};
  double worst = 0.0;
  for (const auto& s : k44.samples) {
    for (const auto& [vertex, p] : s.rho.placement()) {
      Vec3 x = p.vec();
      worst = std::max(worst, (tau * sigma * rho_m * x - x).norm());
    }
    for (const auto& [m, perm] : perms)
      for (int k = 0; k < 4; ++k)
        for (int parity : {1, 2}) {
          Vec3 src = s.rho.at(2 * k + parity).vec();
          Vec3 dst = s.rho.at(2 * perm[k] + parity).vec();
          worst = std::max(worst, (*m * src - dst).norm());
        }
  }
  return worst;
}

CdaParams cda_params_from_e(double e) {
  if (!(std::abs(e) < 1.0) || e == 0.0) fail(ErrorCode::OutOfRange, "e must lie in (-1, 1) without 0");
  return {e / std::sqrt(e * e + 1.0), e};
}

double cda_relation(double a, double e) { return a * a * a * e * e + a * a * a - a * e * e; }

void validate_cda_params(const CdaParams& p) {
  if (!(std::abs(p.e) < 1.0) || p.e == 0.0) fail(ErrorCode::OutOfRange, "e must lie in (-1, 1) without 0");
  if (p.a == 0.0) fail(ErrorCode::OutOfRange, "a must be nonzero");
  if (std::abs(std::abs(p.e) - std::abs(p.a)) < 1e-12) fail(ErrorCode::OutOfRange, "e must differ from +-a");
  if (std::abs(cda_relation(p.a, p.e)) > 1e-12)
    fail(ErrorCode::OutOfRange, "(a, e) is off the relation a^3 e^2 + a^3 - a e^2 = 0");
}

std::pair<long long, long long> cda_relation_exact(long long a_num, long long a_den, long long e_num,
                                                   long long e_den) {
  if (a_den == 0 || e_den == 0) fail(ErrorCode::ZeroDivisor, "zero denominator");
  using Q = boost::rational<long long>;
  Q a(a_num, a_den);
  Q e(e_num, e_den);
  Q r = a * a * a * e * e + a * a * a - a * e * e;
  return {r.numerator(), r.denominator()};
}

SphericalRealization cda_realization(const CdaParams& p, double t, CdaBranch branch) {
  validate_cda_params(p);
  if (t == 0.0 || std::abs(std::abs(t) - 1.0) < 1e-12) fail(ErrorCode::PoleT, "t hits a pole");
  const double a = p.a;
  const double e = p.e;
  const double x3 = 2.0 * t / (t * t + 1.0);
  const double z3 = (t * t - 1.0) / (t * t + 1.0);
  const double z2 = a * (1.0 - x3) / z3;
  const double z4 = -a * (1.0 + x3) / z3;
  double r2 = 1.0 - a * a - z2 * z2;
  if (r2 < -1e-14) fail(ErrorCode::NegativeDiscriminant, "y2 radicand is negative");
  const double y2 = (branch.s2 >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(r2, 0.0));
  const double k = (z2 - z4) / e;
  double r5 = y2 * y2 + z2 * z2 - z4 * z4;
  if (r5 < -1e-14) fail(ErrorCode::NegativeDiscriminant, "z5 radicand is negative");
  const double z5 = (-y2 + (branch.s5 >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(r5, 0.0))) / k;
  if (std::abs(z5) < 1e-14) fail(ErrorCode::ZeroDivisor, "z5 vanishes");
  const double x5 = -(e * y2 + z2 * z5) / a;
  const double y4 = y2 + k * z5;
  SphericalRealization rho;
  try {
    rho.set(1, SpherePoint(1.0, 0.0, 0.0));
    rho.set(2, SpherePoint(a, y2, z2));
    rho.set(3, SpherePoint(x3, 0.0, z3));
    rho.set(4, SpherePoint(a, y4, z4));
    rho.set(5, SpherePoint(x5, e, z5));
    rho.set(6, SpherePoint(0.0, 1.0, 0.0));
  } catch (const Error&) {
    fail(ErrorCode::NegativeDiscriminant, "t leaves the real branch");
  }
  return rho;
}

std::map<VertexPair, double> cda_deltas(const CdaParams& p) {
  return {{VertexPair::make(1, 2), p.a}, {VertexPair::make(1, 4), p.a}, {VertexPair::make(2, 3), p.a},
          {VertexPair::make(3, 4), -p.a}, {VertexPair::make(2, 5), 0.0}, {VertexPair::make(4, 5), 0.0},
          {VertexPair::make(3, 6), 0.0},  {VertexPair::make(1, 6), 0.0}, {VertexPair::make(5, 6), p.e}};
}

MotionTrajectory cda_motion(const CdaParams& p, const std::vector<double>& t_values, CdaBranch branch) {
  if (t_values.empty()) fail(ErrorCode::OutOfRange, "need at least one parameter value");
  validate_cda_params(p);
  MotionTrajectory traj;
  traj.graph = corpus::k33();
  traj.kind = MotionKind::const_diag_angle;
  traj.lengths = LengthAssignment::from_delta(cda_deltas(p));
  for (double t : t_values) traj.samples.push_back(make_sample(t, cda_realization(p, t, branch)));
  require_some_motion(traj);
  return traj;
}

std::vector<Interval> cda_feasible_intervals(const CdaParams& p, CdaBranch branch, double range,
                                             std::size_t grid) {
  validate_cda_params(p);
  auto feasible = [&](double t) {
    try {
      cda_realization(p, t, branch);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  auto refine = [&](double in, double out) {
    for (int k = 0; k < 60; ++k) {
      double mid = 0.5 * (in + out);
      (feasible(mid) ? in : out) = mid;
    }
    return in;
  };
  std::vector<Interval> out;
  const auto ts = evenly_spaced(-range, range, grid);
  std::optional<double> start;
  double prev = ts.front();
  for (double t : ts) {
    bool f = feasible(t);
    if (f && !start) start = (t == ts.front()) ? t : refine(t, prev);
    if (!f && start) {
      out.push_back({*start, refine(prev, t)});
      start.reset();
    }
    prev = t;
  }
  if (start) out.push_back({*start, ts.back()});
  return out;
}

}  // namespace sphflex

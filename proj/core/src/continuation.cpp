#include "sphflex/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sphflex/error.hpp"

namespace sphflex {

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::max_steps: return "max_steps";
    case StopReason::step_failure: return "step_failure";
    case StopReason::loop_closed: return "loop_closed";
    case StopReason::singular_point: return "singular_point";
  }
  return "max_steps";
}

void validate(const TraceConfig& cfg) {
  if (!(cfg.step_size > 0) || cfg.max_steps <= 0 || !(cfg.newton_tol >= 1e-13) ||
      cfg.max_newton_iters <= 0 || !(cfg.min_step > 0) || cfg.min_step > cfg.step_size)
    fail(ErrorCode::OutOfRange, "invalid trace configuration");
}

GaugeFix default_gauge(const Graph& g, const SphericalRealization& rho) {
  GaugeFix gauge;
  gauge.anchor = g.vertices().front();
  const Vec3 a = rho.at(gauge.anchor).vec();
  for (Vertex v : g.vertices()) {
    if (v == gauge.anchor) continue;
    if (a.cross(rho.at(v).vec()).norm() > 1e-6) {
      gauge.meridian = v;
      return gauge;
    }
  }
  fail(ErrorCode::DegenerateAxis, "all placements are collinear with the anchor");
}

SphericalRealization regauge(const SphericalRealization& rho, const GaugeFix& gauge) {
  if (gauge.anchor == gauge.meridian) fail(ErrorCode::DegenerateAxis, "anchor and meridian coincide");
  if (gauge.axis != 1 && gauge.axis != 2) fail(ErrorCode::OutOfRange, "gauge axis must be 1 (y) or 2 (z)");
  Vec3 a = rho.at(gauge.anchor).vec();
  Eigen::Matrix3d r1 = Eigen::Quaterniond::FromTwoVectors(a, Vec3::UnitX()).toRotationMatrix();
  Vec3 m = r1 * rho.at(gauge.meridian).vec();
  double rad = std::hypot(m.y(), m.z());
  if (rad < 1e-9) fail(ErrorCode::DegenerateAxis, "meridian vertex is collinear with the anchor");
  // Turn about x so the chosen coordinate vanishes and the other one is positive.
  double current = std::atan2(m.z(), m.y());
  double target = gauge.axis == 2 ? 0.0 : M_PI / 2;
  Eigen::Matrix3d r2 = Eigen::AngleAxisd(target - current, Vec3::UnitX()).toRotationMatrix();
  Eigen::Matrix3d r = r2 * r1;
  SphericalRealization out;
  for (const auto& [v, p] : rho.placement()) out.set(v, SpherePoint::normalized(r * p.vec()));
  out.set(gauge.anchor, SpherePoint(1.0, 0.0, 0.0));
  Vec3 mer = out.at(gauge.meridian).vec();
  mer[gauge.axis] = 0.0;
  out.set(gauge.meridian, SpherePoint::normalized(mer));
  return out;
}

Eigen::VectorXd pack(const Graph& g, const SphericalRealization& rho) {
  Eigen::VectorXd x(3 * g.num_vertices());
  for (std::size_t k = 0; k < g.num_vertices(); ++k) x.segment<3>(3 * k) = rho.at(g.vertices()[k]).vec();
  return x;
}

SphericalRealization unpack(const Graph& g, const Eigen::VectorXd& x) {
  SphericalRealization rho;
  for (std::size_t k = 0; k < g.num_vertices(); ++k)
    rho.set(g.vertices()[k], SpherePoint::normalized(x.segment<3>(3 * k)));
  return rho;
}

namespace {

void check_gauge(const Graph& g, const GaugeFix& gauge) {
  if (!g.has_vertex(gauge.anchor) || !g.has_vertex(gauge.meridian))
    fail(ErrorCode::UnknownVertex, "gauge vertices must belong to the graph");
  if (gauge.anchor == gauge.meridian) fail(ErrorCode::DegenerateAxis, "anchor and meridian coincide");
  if (gauge.axis != 1 && gauge.axis != 2) fail(ErrorCode::OutOfRange, "gauge axis must be 1 (y) or 2 (z)");
}

}  // namespace

Eigen::VectorXd residual(const Graph& g, const LengthAssignment& lam, const Eigen::VectorXd& x,
                         const GaugeFix& gauge) {
  check_gauge(g, gauge);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  Eigen::VectorXd f(n + m + 3);
  for (std::size_t k = 0; k < n; ++k) f(k) = x.segment<3>(3 * k).squaredNorm() - 1.0;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& edge = g.edges()[e];
    int a = g.index_of(edge.a);
    int b = g.index_of(edge.b);
    double d = (1.0 - x.segment<3>(3 * a).dot(x.segment<3>(3 * b))) / 2.0;
    f(n + e) = d - lam.lambda(edge);
  }
  int ia = g.index_of(gauge.anchor);
  int im = g.index_of(gauge.meridian);
  f(n + m) = x(3 * ia + 1);
  f(n + m + 1) = x(3 * ia + 2);
  f(n + m + 2) = x(3 * im + gauge.axis);
  return f;
}

Eigen::VectorXd residual(const Graph& g, const LengthAssignment& lam, const SphericalRealization& rho,
                         const GaugeFix& gauge) {
  return residual(g, lam, pack(g, rho), gauge);
}

Eigen::MatrixXd jacobian(const Graph& g, const Eigen::VectorXd& x, const GaugeFix& gauge) {
  check_gauge(g, gauge);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + m + 3, 3 * n);
  for (std::size_t k = 0; k < n; ++k) j.block<1, 3>(k, 3 * k) = 2.0 * x.segment<3>(3 * k).transpose();
  for (std::size_t e = 0; e < m; ++e) {
    const auto& edge = g.edges()[e];
    int a = g.index_of(edge.a);
    int b = g.index_of(edge.b);
    j.block<1, 3>(n + e, 3 * a) = -0.5 * x.segment<3>(3 * b).transpose();
    j.block<1, 3>(n + e, 3 * b) = -0.5 * x.segment<3>(3 * a).transpose();
  }
  int ia = g.index_of(gauge.anchor);
  int im = g.index_of(gauge.meridian);
  j(n + m, 3 * ia + 1) = 1.0;
  j(n + m + 1, 3 * ia + 2) = 1.0;
  j(n + m + 2, 3 * im + gauge.axis) = 1.0;
  return j;
}

namespace {

constexpr double kRankThreshold = 1e-7;

struct NullInfo {
  int corank = 0;
  Eigen::VectorXd tangent;
};

NullInfo null_space(const Eigen::MatrixXd& j) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const int cols = static_cast<int>(j.cols());
  int rank = 0;
  double top = s.size() ? s(0) : 0.0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > kRankThreshold * top) ++rank;
  NullInfo out;
  out.corank = cols - rank;
  out.tangent = svd.matrixV().col(cols - 1);
  return out;
}

// Newton on F(y) = 0, t.(y - anchor) = 0.
bool correct(const Graph& g, const LengthAssignment& lam, const GaugeFix& gauge, Eigen::VectorXd& y,
             const Eigen::VectorXd* t, const Eigen::VectorXd& anchor, const TraceConfig& cfg) {
  for (int it = 0; it <= cfg.max_newton_iters; ++it) {
    Eigen::VectorXd f = residual(g, lam, y, gauge);
    if (f.lpNorm<Eigen::Infinity>() <= cfg.newton_tol) return true;
    if (it == cfg.max_newton_iters) break;
    Eigen::MatrixXd j = jacobian(g, y, gauge);
    Eigen::MatrixXd a(j.rows() + (t ? 1 : 0), j.cols());
    Eigen::VectorXd b(a.rows());
    a.topRows(j.rows()) = j;
    b.head(j.rows()) = -f;
    if (t) {
      a.row(j.rows()) = t->transpose();
      b(j.rows()) = -t->dot(y - anchor);
    }
    Eigen::VectorXd dy = a.completeOrthogonalDecomposition().solve(b);
    if (!dy.allFinite()) return false;
    y += dy;
  }
  return false;
}

}  // namespace

int corank(const Graph& g, const SphericalRealization& rho, const GaugeFix& gauge) {
  return null_space(jacobian(g, pack(g, rho), gauge)).corank;
}

TraceResult trace(const Graph& g, const LengthAssignment& lam, const SphericalRealization& seed,
                  const GaugeFix& gauge, const TraceConfig& cfg) {
  validate(cfg);
  check_gauge(g, gauge);
  if (!seed.places_all(g)) fail(ErrorCode::SeedNotOnCurve, "seed does not place every vertex");
  if (!lam.covers(g)) fail(ErrorCode::SeedNotOnCurve, "lengths do not cover every edge");
  Eigen::VectorXd x = pack(g, regauge(seed, gauge));
  double r0 = residual(g, lam, x, gauge).lpNorm<Eigen::Infinity>();
  if (r0 > 1e-6) fail(ErrorCode::SeedNotOnCurve, "seed residual " + std::to_string(r0));
  if (r0 > cfg.newton_tol && !correct(g, lam, gauge, x, nullptr, x, cfg))
    fail(ErrorCode::SeedNotOnCurve, "seed could not be corrected onto the curve");

  NullInfo info = null_space(jacobian(g, x, gauge));
  if (info.corank != 1)
    fail(ErrorCode::RankDeficient, info.corank == 0 ? "corank 0: the seed is rigid"
                                                    : "corank " + std::to_string(info.corank) +
                                                          ": singular or higher-dimensional point");

  TraceResult out;
  out.trajectory.graph = g;
  out.trajectory.lengths = lam;
  out.trajectory.kind = MotionKind::traced;
  auto push = [&](const Eigen::VectorXd& y, const Eigen::VectorXd& t) {
    MotionSample s{out.arclength, unpack(g, y)};
    mark_degeneracies(s);
    out.trajectory.samples.push_back(std::move(s));
    out.tangents.push_back(t);
  };

  const Eigen::VectorXd x0 = x;
  Eigen::VectorXd t = info.tangent.normalized();
  const Eigen::VectorXd t0 = t;
  push(x, t);
  double h = cfg.step_size;
  int accepted = 0;
  for (int step = 0; step < cfg.max_steps; ++step) {
    Eigen::VectorXd y;
    bool ok = false;
    while (h >= cfg.min_step) {
      Eigen::VectorXd pred = x + h * t;
      y = pred;
      if (correct(g, lam, gauge, y, &t, pred, cfg) && (y - x).norm() < 2.0 * h) {
        ok = true;
        break;
      }
      h /= 2.0;
    }
    if (!ok) {
      if (accepted == 0) fail(ErrorCode::StepFailure, "no continuation step succeeded");
      out.stop = StopReason::step_failure;
      return out;
    }
    NullInfo next = null_space(jacobian(g, y, gauge));
    if (next.corank != 1) {
      out.stop = StopReason::singular_point;
      return out;
    }
    Eigen::VectorXd tn = next.tangent.normalized();
    if (tn.dot(t) < 0) tn = -tn;
    out.arclength += (y - x).norm();
    x = y;
    t = tn;
    ++accepted;
    push(x, t);
    if (out.arclength > 4.0 * cfg.step_size && (x - x0).norm() < std::max(h, cfg.step_size) &&
        t.dot(t0) > 0) {
      out.stop = StopReason::loop_closed;
      return out;
    }
    h = std::min(cfg.step_size, h * 1.5);
  }
  out.stop = StopReason::max_steps;
  return out;
}

std::vector<Vec3> circle_intersection(const Vec3& n1, double d1, const Vec3& n2, double d2,
                                      double tangency_tol) {
  const double c = n1.dot(n2);
  const Vec3 w = n1.cross(n2);
  const double w2 = w.squaredNorm();
  if (w2 < 1e-14) fail(ErrorCode::DegenerateRealization, "neighbors coincide or are antipodal");
  const double alpha = (d1 - c * d2) / w2;
  const double beta = (d2 - c * d1) / w2;
  const Vec3 base = alpha * n1 + beta * n2;
  const double disc = 1.0 - base.squaredNorm();
  if (disc < -tangency_tol) return {};
  if (disc <= tangency_tol) return {base.normalized()};
  const double gamma = std::sqrt(disc / w2);
  return {base + gamma * w, base - gamma * w};
}

namespace {

std::vector<Vec3> placements(const Graph& g, const LengthAssignment& lam,
                             const SphericalRealization& partial, Vertex v, double tol) {
  std::vector<Vertex> placed;
  for (int nb : g.neighbors(g.index_of(v))) {
    Vertex u = g.vertices()[nb];
    if (partial.has(u)) placed.push_back(u);
  }
  if (placed.size() < 2) fail(ErrorCode::UnderConstrained, "fewer than two placed neighbors");
  // The pair of neighbors with the best-conditioned intersection.
  std::pair<Vertex, Vertex> best{placed[0], placed[1]};
  double best_w = -1.0;
  for (std::size_t i = 0; i < placed.size(); ++i)
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      double w = partial.at(placed[i]).vec().cross(partial.at(placed[j]).vec()).norm();
      if (w > best_w) {
        best_w = w;
        best = {placed[i], placed[j]};
      }
    }
  auto cands = circle_intersection(partial.at(best.first).vec(), lam.delta(v, best.first),
                                   partial.at(best.second).vec(), lam.delta(v, best.second));
  std::vector<Vec3> out;
  for (const Vec3& x : cands) {
    bool ok = true;
    for (Vertex u : placed)
      if (std::abs(x.dot(partial.at(u).vec()) - lam.delta(v, u)) > tol) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

int fiber_count(const Graph& g, const LengthAssignment& lam, const SphericalRealization& partial,
                Vertex free_vertex) {
  if (!g.has_vertex(free_vertex)) fail(ErrorCode::UnknownVertex, "free vertex not in graph");
  return static_cast<int>(placements(g, lam, partial, free_vertex, 1e-9).size());
}

int empirical_map_degree(const MotionTrajectory& traj, const std::set<Vertex>& forgotten,
                         std::size_t max_samples) {
  if (traj.samples.empty()) fail(ErrorCode::InsufficientSamples, "empty trajectory");
  for (Vertex v : forgotten)
    if (!traj.graph.has_vertex(v)) fail(ErrorCode::UnknownVertex, "forgotten vertex not in graph");
  if (forgotten.empty()) return 1;
  const Graph& g = traj.graph;
  std::size_t stride = std::max<std::size_t>(1, traj.samples.size() / std::max<std::size_t>(1, max_samples));
  int best = 0;
  for (std::size_t k = 0; k < traj.samples.size(); k += stride) {
    SphericalRealization base;
    for (const auto& [v, p] : traj.samples[k].rho.placement())
      if (!forgotten.count(v)) base.set(v, p);
    std::vector<std::map<Vertex, Vec3>> completions;
    std::function<void(SphericalRealization&, std::set<Vertex>)> rec =
        [&](SphericalRealization& cur, std::set<Vertex> left) {
          if (left.empty()) {
            std::map<Vertex, Vec3> c;
            for (Vertex v : forgotten) c[v] = cur.at(v).vec();
            for (const auto& other : completions) {
              double d = 0.0;
              for (Vertex v : forgotten) d = std::max(d, (other.at(v) - c[v]).norm());
              if (d < 1e-6) return;
            }
            completions.push_back(std::move(c));
            return;
          }
          Vertex next = 0;
          bool found = false;
          for (Vertex v : left) {
            int placed = 0;
            for (int nb : g.neighbors(g.index_of(v)))
              if (cur.has(g.vertices()[nb])) ++placed;
            if (placed >= 2) {
              next = v;
              found = true;
              break;
            }
          }
          if (!found) fail(ErrorCode::UnderConstrained, "a forgotten vertex has fewer than two placed neighbors");
          left.erase(next);
          for (const Vec3& x : placements(g, traj.lengths, cur, next, 1e-7)) {
            SphericalRealization more = cur;
            more.set(next, SpherePoint::normalized(x));
            rec(more, left);
          }
        };
    rec(base, forgotten);
    best = std::max(best, static_cast<int>(completions.size()));
  }
  return best;
}

}  // namespace sphflex

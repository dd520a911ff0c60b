#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/SVD>

#include "sphflex/error.hpp"
#include "sphflex/motions.hpp"

namespace sphflex {

namespace {

constexpr std::array<Vertex, 3> kOdd{1, 3, 5};
constexpr std::array<Vertex, 3> kEven{2, 4, 6};

// Unit normal of the plane through the origin best fitting three points.
Vec3 best_plane_normal(const std::array<Vec3, 3>& pts, double& spread) {
  Eigen::Matrix3d m;
  for (int k = 0; k < 3; ++k) m.row(k) = pts[k].transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullV);
  spread = svd.singularValues()(2);
  return svd.matrixV().col(2);
}

std::array<Vec3, 3> side(const SphericalRealization& rho, const std::array<Vertex, 3>& vs) {
  return {rho.at(vs[0]).vec(), rho.at(vs[1]).vec(), rho.at(vs[2]).vec()};
}

// Proper rotation best sending src[k] to dst[k], with its max residual.
std::pair<Eigen::Matrix3d, double> fit_rotation(const std::vector<Vec3>& src, const std::vector<Vec3>& dst) {
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (std::size_t k = 0; k < src.size(); ++k) h += dst[k] * src[k].transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  double d = (u * v.transpose()).determinant() > 0 ? 1.0 : -1.0;
  Eigen::Matrix3d r = u * Eigen::Vector3d(1, 1, d).asDiagonal() * v.transpose();
  double res = 0.0;
  for (std::size_t k = 0; k < src.size(); ++k) res = std::max(res, (r * src[k] - dst[k]).norm());
  return {r, res};
}

}  // namespace

bool is_dixon1_sample(const SphericalRealization& rho, double tol) {
  double s_odd = 0.0;
  double s_even = 0.0;
  Vec3 n_odd = best_plane_normal(side(rho, kOdd), s_odd);
  Vec3 n_even = best_plane_normal(side(rho, kEven), s_even);
  return s_odd <= tol && s_even <= tol && std::abs(n_odd.dot(n_even)) <= tol;
}

bool is_dixon2_sample(const SphericalRealization& rho, double tol) {
  // An odd-to-even bijection c -> partner(c) fixes the three involutions: the one
  // swapping the odd pair without c swaps the even pair without partner(c).
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int flips = 0; flips < 32; ++flips) {
      std::map<Vertex, Vec3> x;
      for (int k = 0; k < 3; ++k) x[kOdd[k]] = rho.at(kOdd[k]).vec();
      for (int k = 0; k < 3; ++k) {
        double s = (flips >> k & 1) ? -1.0 : 1.0;
        x[kEven[k]] = s * rho.at(kEven[k]).vec();
      }
      for (int k = 0; k < 2; ++k)
        if (flips >> (3 + k) & 1) x[kOdd[k + 1]] = -x[kOdd[k + 1]];
      std::array<Eigen::Matrix3d, 3> inv{};
      bool ok = true;
      for (int c = 0; c < 3 && ok; ++c) {
        Vertex o1 = kOdd[(c + 1) % 3];
        Vertex o2 = kOdd[(c + 2) % 3];
        int pc = perm[c];
        Vertex e1 = kEven[(pc + 1) % 3];
        Vertex e2 = kEven[(pc + 2) % 3];
        auto [m, res] = fit_rotation({x[o1], x[o2], x[e1], x[e2]}, {x[o2], x[o1], x[e2], x[e1]});
        ok = res <= tol && (m * m - Eigen::Matrix3d::Identity()).norm() <= tol;
        inv[c] = m;
      }
      if (!ok) continue;
      if ((inv[0] * inv[1] * inv[2] - Eigen::Matrix3d::Identity()).norm() > tol) continue;
      if ((inv[0] * inv[1] - inv[1] * inv[0]).norm() > tol) continue;
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Odd x and even y with x orthogonal to the other evens, y to the other odds.
std::vector<std::pair<Vertex, Vertex>> dual_pairs(const SphericalRealization& rho, double tol) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex x : kOdd)
    for (Vertex y : kEven) {
      bool ok = true;
      for (Vertex e : kEven)
        if (e != y && std::abs(delta(rho.at(x), rho.at(e))) > tol) ok = false;
      for (Vertex o : kOdd)
        if (o != x && std::abs(delta(rho.at(y), rho.at(o))) > tol) ok = false;
      if (ok) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace

MotionKind detect_k33_motion_kind(const MotionTrajectory& traj, double tol) {
  for (Vertex v : {1, 2, 3, 4, 5, 6})
    if (!traj.graph.has_vertex(v)) fail(ErrorCode::DomainViolation, "detector expects K3,3 on 1..6");
  if (traj.graph.num_vertices() != 6 || traj.graph.num_edges() != 9)
    fail(ErrorCode::DomainViolation, "detector expects K3,3 on 1..6");
  std::vector<const SphericalRealization*> distinct;
  for (const auto& s : traj.samples) {
    bool fresh = true;
    for (const auto* d : distinct)
      if (!essentially_distinct(*d, s.rho)) fresh = false;
    if (fresh) distinct.push_back(&s.rho);
  }
  if (distinct.size() < 3) fail(ErrorCode::InsufficientSamples, "need three essentially distinct samples");
  for (const auto& s : traj.samples)
    if (!s.injective || !s.antipodal_free)
      fail(ErrorCode::DegenerateRealization, "a sample has coincident or antipodal vertices");

  auto all = [&](auto pred) {
    return std::all_of(traj.samples.begin(), traj.samples.end(),
                       [&](const MotionSample& s) { return pred(s.rho); });
  };
  if (all([&](const SphericalRealization& r) { return is_dixon1_sample(r, tol); })) return MotionKind::dixon1;
  if (all([&](const SphericalRealization& r) { return is_dixon2_sample(r, tol); })) return MotionKind::dixon2;

  auto candidates = dual_pairs(traj.samples.front().rho, tol);
  for (const auto& [x, y] : candidates) {
    double e0 = delta(traj.samples.front().rho.at(x), traj.samples.front().rho.at(y));
    bool ok = true;
    for (const auto& s : traj.samples) {
      auto here = dual_pairs(s.rho, tol);
      if (std::find(here.begin(), here.end(), std::make_pair(x, y)) == here.end() ||
          std::abs(delta(s.rho.at(x), s.rho.at(y)) - e0) > tol)
        ok = false;
    }
    if (ok) return MotionKind::const_diag_angle;
  }
  return MotionKind::unclassified;
}

}  // namespace sphflex

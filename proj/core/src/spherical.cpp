#include "sphflex/spherical.hpp"

#include <cmath>
#include <string>

#include "sphflex/error.hpp"

namespace sphflex {

SpherePoint::SpherePoint() : v_(1.0, 0.0, 0.0) {}

SpherePoint::SpherePoint(double x, double y, double z) : v_(x, y, z) {
  if (!std::isfinite(v_.squaredNorm()) || std::abs(v_.squaredNorm() - 1.0) > kUnitTolerance)
    fail(ErrorCode::DomainViolation, "point is not on the unit sphere");
}

SpherePoint SpherePoint::normalized(const Vec3& v) {
  double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) fail(ErrorCode::DomainViolation, "cannot normalize vector");
  Vec3 u = v / n;
  return SpherePoint(u.x(), u.y(), u.z());
}

SpherePoint SpherePoint::antipode() const { return SpherePoint(-x(), -y(), -z()); }

double delta(const SpherePoint& t, const SpherePoint& u) { return t.vec().dot(u.vec()); }

double sph_dist(const SpherePoint& t, const SpherePoint& u) { return lambda_from_delta(delta(t, u)); }

SphericalRealization::SphericalRealization(std::map<Vertex, SpherePoint> placement)
    : placement_(std::move(placement)) {}

const SpherePoint& SphericalRealization::at(Vertex v) const {
  auto it = placement_.find(v);
  if (it == placement_.end()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not placed");
  return it->second;
}

std::vector<Vertex> SphericalRealization::vertices() const {
  std::vector<Vertex> out;
  for (const auto& [v, p] : placement_) out.push_back(v);
  return out;
}

bool SphericalRealization::places_all(const Graph& g) const {
  for (Vertex v : g.vertices())
    if (!has(v)) return false;
  return true;
}

namespace {

constexpr double kLambdaMargin = 1e-12;

void check_lambda(const VertexPair& e, double l) {
  if (!(l > kLambdaMargin && l < 1.0 - kLambdaMargin))
    fail(ErrorCode::DomainViolation, "length of {" + std::to_string(e.a) + "," +
                                         std::to_string(e.b) + "} outside (0,1)");
}

}  // namespace

LengthAssignment LengthAssignment::from_lambda(const std::map<VertexPair, double>& lambda) {
  LengthAssignment out;
  for (const auto& [e, l] : lambda) check_lambda(e, l);
  out.lambda_ = lambda;
  return out;
}

LengthAssignment LengthAssignment::from_delta(const std::map<VertexPair, double>& delta) {
  std::map<VertexPair, double> lambda;
  for (const auto& [e, d] : delta) lambda[e] = lambda_from_delta(d);
  return from_lambda(lambda);
}

LengthAssignment LengthAssignment::induced(const Graph& g, const SphericalRealization& rho) {
  std::map<VertexPair, double> lambda;
  for (const auto& e : g.edges()) lambda[e] = sph_dist(rho.at(e.a), rho.at(e.b));
  return from_lambda(lambda);
}

double LengthAssignment::lambda(const VertexPair& e) const {
  auto it = lambda_.find(e);
  if (it == lambda_.end())
    fail(ErrorCode::UnknownVertex,
         "no length for {" + std::to_string(e.a) + "," + std::to_string(e.b) + "}");
  return it->second;
}

bool LengthAssignment::covers(const Graph& g) const {
  for (const auto& e : g.edges())
    if (!lambda_.count(e)) return false;
  return true;
}

LengthAssignment LengthAssignment::restricted(const Graph& g) const {
  LengthAssignment out;
  for (const auto& e : g.edges()) out.lambda_[e] = lambda(e);
  return out;
}

Rotation::Rotation() : m_(Eigen::Matrix3d::Identity()) {}

Rotation::Rotation(const Eigen::Matrix3d& m) : m_(m) {
  double orth = (m * m.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (orth > kUnitTolerance || std::abs(m.determinant() - 1.0) > kUnitTolerance)
    fail(ErrorCode::DomainViolation, "matrix is not a rotation");
}

SpherePoint Rotation::apply(const SpherePoint& p) const { return SpherePoint::normalized(m_ * p.vec()); }

Rotation Rotation::operator*(const Rotation& other) const { return Rotation(m_ * other.m_); }

double max_edge_residual(const Graph& g, const SphericalRealization& rho,
                         const LengthAssignment& lam) {
  double worst = 0.0;
  for (const auto& e : g.edges())
    worst = std::max(worst, std::abs(sph_dist(rho.at(e.a), rho.at(e.b)) - lam.lambda(e)));
  return worst;
}

bool is_compatible(const Graph& g, const SphericalRealization& rho, const LengthAssignment& lam,
                   double tol) {
  return rho.places_all(g) && lam.covers(g) && max_edge_residual(g, rho, lam) <= tol;
}

SphericalRealization apply_rotation(const Rotation& r, const SphericalRealization& rho) {
  std::map<Vertex, SpherePoint> out;
  for (const auto& [v, p] : rho.placement()) out.emplace(v, r.apply(p));
  return SphericalRealization(std::move(out));
}

Eigen::MatrixXd gram_matrix(const SphericalRealization& rho) {
  const auto& pl = rho.placement();
  Eigen::MatrixXd m(pl.size(), 3);
  Eigen::Index i = 0;
  for (const auto& [v, p] : pl) m.row(i++) = p.vec().transpose();
  return m * m.transpose();
}

namespace {

constexpr double kOrientationThreshold = 1e-8;

double triple(const SphericalRealization& r, Vertex a, Vertex b, Vertex c) {
  return r.at(a).vec().dot(r.at(b).vec().cross(r.at(c).vec()));
}

}  // namespace

DistinctnessReport compare_realizations(const SphericalRealization& r1,
                                        const SphericalRealization& r2, double tol) {
  if (r1.vertices() != r2.vertices())
    fail(ErrorCode::UnknownVertex, "realizations place different vertex sets");
  DistinctnessReport out;
  out.gram_distance = (gram_matrix(r1) - gram_matrix(r2)).cwiseAbs().maxCoeff();
  std::vector<Vertex> vs = r1.vertices();
  double d1 = 0.0;
  double d2 = 0.0;
  for (std::size_t i = 0; i < vs.size() && !out.orientation_checked; ++i)
    for (std::size_t j = i + 1; j < vs.size() && !out.orientation_checked; ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        d1 = triple(r1, vs[i], vs[j], vs[k]);
        if (std::abs(d1) > kOrientationThreshold) {
          d2 = triple(r2, vs[i], vs[j], vs[k]);
          out.orientation_checked = true;
          break;
        }
      }
  bool same_gram = out.gram_distance <= tol;
  bool same_orientation = !out.orientation_checked || (d1 > 0) == (d2 > 0);
  out.distinct = !(same_gram && same_orientation);
  return out;
}

bool essentially_distinct(const SphericalRealization& r1, const SphericalRealization& r2,
                          double tol) {
  return compare_realizations(r1, r2, tol).distinct;
}

Rotation rotation_about_axis(const SpherePoint& axis, double angle) {
  const Vec3& k = axis.vec();
  Eigen::Matrix3d kx;
  kx << 0.0, -k.z(), k.y(), k.z(), 0.0, -k.x(), -k.y(), k.x(), 0.0;
  Eigen::Matrix3d m =
      Eigen::Matrix3d::Identity() + std::sin(angle) * kx + (1.0 - std::cos(angle)) * kx * kx;
  return Rotation(m);
}

}  // namespace sphflex

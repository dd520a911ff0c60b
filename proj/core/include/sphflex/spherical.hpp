#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "sphflex/graph.hpp"

namespace sphflex {

using Vec3 = Eigen::Vector3d;

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kCompatibilityTolerance = 1e-9;

class SpherePoint {
 public:
  SpherePoint();
  // Throws DomainViolation unless x^2+y^2+z^2 = 1 within kUnitTolerance.
  SpherePoint(double x, double y, double z);

  static SpherePoint normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  SpherePoint antipode() const;

 private:
  Vec3 v_;
};

// Inner product <t,u>.
double delta(const SpherePoint& t, const SpherePoint& u);
// (1 - <t,u>) / 2: 0 for coincident, 1 for antipodal points.
double sph_dist(const SpherePoint& t, const SpherePoint& u);

inline double lambda_from_delta(double d) { return (1.0 - d) / 2.0; }
inline double delta_from_lambda(double l) { return 1.0 - 2.0 * l; }

class SphericalRealization {
 public:
  SphericalRealization() = default;
  explicit SphericalRealization(std::map<Vertex, SpherePoint> placement);

  const SpherePoint& at(Vertex v) const;
  void set(Vertex v, const SpherePoint& p) { placement_[v] = p; }
  bool has(Vertex v) const { return placement_.count(v) != 0; }
  std::vector<Vertex> vertices() const;
  const std::map<Vertex, SpherePoint>& placement() const { return placement_; }
  bool places_all(const Graph& g) const;

 private:
  std::map<Vertex, SpherePoint> placement_;
};

// Edge lengths stored as lambda in (0,1); delta = 1 - 2 lambda.
class LengthAssignment {
 public:
  LengthAssignment() = default;

  static LengthAssignment from_lambda(const std::map<VertexPair, double>& lambda);
  static LengthAssignment from_delta(const std::map<VertexPair, double>& delta);
  // Lengths read off a realization; edges of antipodal or coincident endpoints are rejected.
  static LengthAssignment induced(const Graph& g, const SphericalRealization& rho);

  double lambda(const VertexPair& e) const;
  double delta(const VertexPair& e) const { return delta_from_lambda(lambda(e)); }
  double lambda(Vertex u, Vertex v) const { return lambda(VertexPair::make(u, v)); }
  double delta(Vertex u, Vertex v) const { return delta(VertexPair::make(u, v)); }
  bool covers(const Graph& g) const;
  const std::map<VertexPair, double>& values() const { return lambda_; }
  LengthAssignment restricted(const Graph& g) const;

 private:
  std::map<VertexPair, double> lambda_;
};

class Rotation {
 public:
  Rotation();
  // Throws DomainViolation unless orthogonal with determinant +1 (1e-12).
  explicit Rotation(const Eigen::Matrix3d& m);

  const Eigen::Matrix3d& matrix() const { return m_; }
  SpherePoint apply(const SpherePoint& p) const;
  Rotation operator*(const Rotation& other) const;

 private:
  Eigen::Matrix3d m_;
};

double max_edge_residual(const Graph& g, const SphericalRealization& rho,
                         const LengthAssignment& lam);
bool is_compatible(const Graph& g, const SphericalRealization& rho, const LengthAssignment& lam,
                   double tol = kCompatibilityTolerance);

SphericalRealization apply_rotation(const Rotation& r, const SphericalRealization& rho);

// Gram matrix over the sorted placed vertices.
Eigen::MatrixXd gram_matrix(const SphericalRealization& rho);

struct DistinctnessReport {
  bool distinct = true;
  double gram_distance = 0.0;
  // False when fewer than three placements are linearly independent; the verdict then
  // rests on the Gram matrices alone, which is exact for such configurations.
  bool orientation_checked = false;
};

DistinctnessReport compare_realizations(const SphericalRealization& r1,
                                        const SphericalRealization& r2,
                                        double tol = kCompatibilityTolerance);
bool essentially_distinct(const SphericalRealization& r1, const SphericalRealization& r2,
                          double tol = kCompatibilityTolerance);

Rotation rotation_about_axis(const SpherePoint& axis, double angle);

}  // namespace sphflex

#include "sphflex/quad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sphflex/error.hpp"

namespace sphflex {

std::string_view to_string(QuadTag tag) {
  switch (tag) {
    case QuadTag::general: return "general";
    case QuadTag::odd_deltoid: return "odd_deltoid";
    case QuadTag::even_deltoid: return "even_deltoid";
    case QuadTag::rhomboid: return "rhomboid";
    case QuadTag::lozenge: return "lozenge";
  }
  return "general";
}

namespace {

struct SignMatch {
  bool matched = false;
  int alpha = 1;
  bool ambiguous = false;
};

// Pattern x1 = a*y1, x2 = a*y2 for a = +1 or -1.
SignMatch match_pair(double x1, double y1, double x2, double y2, double tol) {
  double plus = std::max(std::abs(x1 - y1), std::abs(x2 - y2));
  double minus = std::max(std::abs(x1 + y1), std::abs(x2 + y2));
  SignMatch m;
  bool p = plus <= tol;
  bool n = minus <= tol;
  m.matched = p || n;
  m.alpha = p ? 1 : -1;
  m.ambiguous = p && n;
  return m;
}

constexpr std::array<std::array<int, 3>, 4> kLozengeProfiles{
    {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};

}  // namespace

QuadType classify(const QuadLengths& q, double tol) {
  QuadType out;
  if (std::abs(q.d12) > tol) {
    double best = tol;
    int hits = 0;
    for (const auto& p : kLozengeProfiles) {
      double r = std::max({std::abs(q.d12 - p[0] * q.d23), std::abs(q.d12 - p[1] * q.d34),
                           std::abs(q.d12 - p[2] * q.d14)});
      if (r <= tol) {
        ++hits;
        if (r <= best || out.tag != QuadTag::lozenge) {
          best = r;
          out.tag = QuadTag::lozenge;
          out.sign_profile = {p[0], p[1], p[2]};
        }
      }
    }
    if (hits > 0) {
      out.sign_ambiguous = hits > 1;
      return out;
    }
  }

  SignMatch odd = match_pair(q.d12, q.d23, q.d34, q.d14, tol);
  SignMatch even = match_pair(q.d12, q.d14, q.d34, q.d23, tol);
  SignMatch rhomb = match_pair(q.d12, q.d34, q.d14, q.d23, tol);
  int matches = int(odd.matched) + int(even.matched) + int(rhomb.matched);
  if (matches > 1)
    fail(ErrorCode::AmbiguousAtTolerance, "several quadrilateral patterns match");
  auto take = [&](QuadTag tag, const SignMatch& m) {
    out.tag = tag;
    out.sign_profile = {m.alpha};
    out.sign_ambiguous = m.ambiguous;
  };
  if (odd.matched)
    take(QuadTag::odd_deltoid, odd);
  else if (even.matched)
    take(QuadTag::even_deltoid, even);
  else if (rhomb.matched)
    take(QuadTag::rhomboid, rhomb);
  return out;
}

QuadLengths flip_vertex(const QuadLengths& q, int vertex) {
  QuadLengths r = q;
  switch (vertex) {
    case 1: r.d12 = -r.d12; r.d14 = -r.d14; break;
    case 2: r.d12 = -r.d12; r.d23 = -r.d23; break;
    case 3: r.d23 = -r.d23; r.d34 = -r.d34; break;
    case 4: r.d34 = -r.d34; r.d14 = -r.d14; break;
    default: fail(ErrorCode::UnknownVertex, "quad vertex must be 1..4");
  }
  return r;
}

NormalizedQuad antipodal_normalize(const QuadLengths& q) {
  NormalizedQuad best{q, {}};
  int best_count = -1;
  for (int mask = 0; mask < 16; ++mask) {
    QuadLengths r = q;
    std::vector<int> flips;
    for (int v = 1; v <= 4; ++v)
      if (mask >> (v - 1) & 1) {
        r = flip_vertex(r, v);
        flips.push_back(v);
      }
    int count = int(r.d12 > 0) + int(r.d23 > 0) + int(r.d34 > 0) + int(r.d14 > 0);
    bool better = count > best_count ||
                  (count == best_count && (flips.size() < best.flips.size() ||
                                           (flips.size() == best.flips.size() && flips < best.flips)));
    if (better) {
      best_count = count;
      best = {r, flips};
    }
  }
  return best;
}

QuadLengths quad_lengths(const QuadPlacement& p) {
  return {delta(p[0], p[1]), delta(p[1], p[2]), delta(p[2], p[3]), delta(p[0], p[3])};
}

namespace {

double fit_residual(const Eigen::Matrix3d& m, const QuadPlacement& p,
                    const std::array<Vec3, 4>& target) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, (m * p[i].vec() - target[i]).norm());
  return r;
}

}  // namespace

RhomboidSymmetry rhomboid_symmetry(const QuadPlacement& p, double tol) {
  QuadLengths q = quad_lengths(p);
  double plus = std::max(std::abs(q.d12 - q.d34), std::abs(q.d14 - q.d23));
  double minus = std::max(std::abs(q.d12 + q.d34), std::abs(q.d14 + q.d23));
  if (std::min(plus, minus) > tol)
    fail(ErrorCode::NoSymmetryFound, "lengths do not satisfy the rhomboid relation");
  RhomboidSymmetry out;
  out.alpha = plus <= minus ? 1 : -1;

  double s = out.alpha;
  std::array<Vec3, 4> target{s * p[2].vec(), p[3].vec(), s * p[0].vec(), p[1].vec()};
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 4; ++i) h += target[i] * p[i].vec().transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d& u = svd.matrixU();
  const Eigen::Matrix3d& v = svd.matrixV();
  double d = (u * v.transpose()).determinant() > 0 ? 1.0 : -1.0;
  Eigen::Matrix3d rot = u * Eigen::Vector3d(1, 1, d).asDiagonal() * v.transpose();
  Eigen::Matrix3d refl = u * Eigen::Vector3d(1, 1, -d).asDiagonal() * v.transpose();
  double r_rot = fit_residual(rot, p, target);
  double r_refl = fit_residual(refl, p, target);
  bool rot_ok = r_rot <= tol;
  bool refl_ok = r_refl <= tol;
  if (rot_ok && refl_ok)
    fail(ErrorCode::AmbiguousAtTolerance, "both a rotation and a reflection realize the symmetry");
  if (!rot_ok && !refl_ok)
    fail(ErrorCode::NoSymmetryFound, "no isometry swaps the diagonal endpoints");
  out.rotation = rot_ok;
  out.residual = rot_ok ? r_rot : r_refl;
  if (out.alpha == 1)
    out.type = out.rotation ? RhomboidType::type1 : RhomboidType::type4;
  else
    out.type = out.rotation ? RhomboidType::type3 : RhomboidType::type2;
  return out;
}

RhomboidType rhomboid_component(const QuadPlacement& p, double tol) {
  return rhomboid_symmetry(p, tol).type;
}

double diagonal_alignment(const QuadPlacement& p) {
  Vec3 n13 = p[0].vec().cross(p[2].vec());
  Vec3 n24 = p[1].vec().cross(p[3].vec());
  if (n13.norm() < 1e-12 || n24.norm() < 1e-12)
    fail(ErrorCode::DegenerateRealization, "diagonal endpoints coincide or are antipodal");
  return std::abs(n13.normalized().dot(n24.normalized()));
}

bool diagonals_not_orthogonal_check(const QuadPlacement& p, double tol) {
  return diagonal_alignment(p) > tol;
}

K33Quad k33_quad(Vertex removed_odd, Vertex removed_even) {
  if (removed_odd % 2 != 1 || removed_odd < 1 || removed_odd > 5 || removed_even % 2 != 0 ||
      removed_even < 2 || removed_even > 6)
    fail(ErrorCode::UnknownVertex, "K3,3 quads remove one odd and one even vertex of 1..6");
  K33Quad q;
  q.removed_odd = removed_odd;
  q.removed_even = removed_even;
  std::vector<Vertex> odd;
  std::vector<Vertex> even;
  for (Vertex v : {1, 3, 5})
    if (v != removed_odd) odd.push_back(v);
  for (Vertex v : {2, 4, 6})
    if (v != removed_even) even.push_back(v);
  q.cycle = {odd[0], even[0], odd[1], even[1]};
  return q;
}

QuadPlacement quad_placement(const SphericalRealization& rho, const std::array<Vertex, 4>& cycle) {
  return {rho.at(cycle[0]), rho.at(cycle[1]), rho.at(cycle[2]), rho.at(cycle[3])};
}

QuadLengths quad_lengths(const LengthAssignment& lam, const std::array<Vertex, 4>& cycle) {
  return {lam.delta(cycle[0], cycle[1]), lam.delta(cycle[1], cycle[2]),
          lam.delta(cycle[2], cycle[3]), lam.delta(cycle[0], cycle[3])};
}

}  // namespace sphflex

#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "sphflex/spherical.hpp"

namespace sphflex {

enum class QuadTag { general, odd_deltoid, even_deltoid, rhomboid, lozenge };

std::string_view to_string(QuadTag tag);

// delta values around the 4-cycle 1-2-3-4; odd vertices 1,3, even vertices 2,4.
struct QuadLengths {
  double d12 = 0.0;
  double d23 = 0.0;
  double d34 = 0.0;
  double d14 = 0.0;
};

struct QuadType {
  QuadTag tag = QuadTag::general;
  // (alpha) for deltoids and rhomboids, (alpha, beta, gamma) for lozenges, empty otherwise.
  std::vector<int> sign_profile;
  // Set when a zero entry lets both signs match; +1 is then preferred.
  bool sign_ambiguous = false;
};

inline constexpr double kQuadTolerance = 1e-9;

QuadType classify(const QuadLengths& q, double tol = kQuadTolerance);

// Negates the two deltas incident to vertex (1..4), i.e. replaces it by its antipode.
QuadLengths flip_vertex(const QuadLengths& q, int vertex);

struct NormalizedQuad {
  QuadLengths lengths;
  std::vector<int> flips;
};

// Representative with the most positive entries; ties go to fewer, then smaller, flips.
NormalizedQuad antipodal_normalize(const QuadLengths& q);

// Placements of quad vertices 1,2,3,4.
using QuadPlacement = std::array<SpherePoint, 4>;

QuadLengths quad_lengths(const QuadPlacement& p);

enum class RhomboidType { type1 = 1, type2 = 2, type3 = 3, type4 = 4 };

struct RhomboidSymmetry {
  RhomboidType type = RhomboidType::type1;
  int alpha = 1;
  bool rotation = true;
  double residual = 0.0;
};

// Finds the isometry swapping 1<->3 and 2<->4 (with 1,3 sent to antipodes when alpha = -1)
// and maps (alpha, rotation/reflection) to the Table 1 rhomboid type.
RhomboidSymmetry rhomboid_symmetry(const QuadPlacement& p, double tol = 1e-8);
RhomboidType rhomboid_component(const QuadPlacement& p, double tol = 1e-8);

// |<n13, n24>| for the normals of the great circles through each diagonal.
double diagonal_alignment(const QuadPlacement& p);
bool diagonals_not_orthogonal_check(const QuadPlacement& p, double tol = 1e-8);

// Quadrilateral of K3,3 left after removing one odd and one even vertex,
// as the cycle (o1, e1, o2, e2) with o1 < o2 and e1 < e2.
struct K33Quad {
  Vertex removed_odd = 0;
  Vertex removed_even = 0;
  std::array<Vertex, 4> cycle{};
};

K33Quad k33_quad(Vertex removed_odd, Vertex removed_even);
QuadPlacement quad_placement(const SphericalRealization& rho, const std::array<Vertex, 4>& cycle);
QuadLengths quad_lengths(const LengthAssignment& lam, const std::array<Vertex, 4>& cycle);

}  // namespace sphflex

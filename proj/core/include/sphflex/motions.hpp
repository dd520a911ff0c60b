#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphflex/coloring.hpp"
#include "sphflex/graph.hpp"
#include "sphflex/spherical.hpp"

namespace sphflex {

enum class MotionKind { polar_nap, dixon1, dixon2, const_diag_angle, traced, unclassified };

std::string_view to_string(MotionKind k);

struct MotionSample {
  double parameter = 0.0;
  SphericalRealization rho;
  bool injective = true;       // no two vertices coincide
  bool antipodal_free = true;  // no two vertices antipodal
};

struct MotionTrajectory {
  Graph graph;
  LengthAssignment lengths;
  std::vector<MotionSample> samples;
  MotionKind kind = MotionKind::traced;

  double max_residual() const;
  // Count of samples lacking injectivity.
  std::size_t non_injective_samples() const;
};

// Fills the injective / antipodal_free flags of a sample.
void mark_degeneracies(MotionSample& s, double tol = 1e-9);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Poles go to +x unless listed with -1 in pole_sides; the other vertices get
// reproducible generic positions and the blue side turns about the x axis.
MotionTrajectory polar_nap_motion(const Graph& g, const EdgeColoring& c,
                                  const std::vector<double>& angles,
                                  std::uint64_t seed = kDefaultSeed,
                                  const std::map<Vertex, int>& pole_sides = {});

std::vector<double> evenly_spaced(double lo, double hi, std::size_t n);

struct Dixon1Params {
  std::array<double, 3> c{0.2, 0.4, 0.6};  // odd vertices 1,3,5
  std::array<double, 3> d{0.3, 0.5, 0.7};  // even vertices 2,4,6
};

// Odd vertices on {y=0} with z = c_i s, even vertices on {x=0} with z = d_j / s.
MotionTrajectory dixon1_motion(const Dixon1Params& params, const std::vector<double>& s_values);

struct Dixon2Params {
  double alpha = 0.2;
  double beta = 0.15;
  double gamma = 0.1;
};

struct Dixon2Point {
  Vec3 p;
  Vec3 q;
};

// p on the sphere with given p1 and q = (alpha/p1, beta/p2, gamma/p3) also unit.
// root selects the smaller (0) or larger (1) admissible p2^2.
Dixon2Point dixon2_solve(const Dixon2Params& params, double p1, int root = 0);

// K4,4 trajectory: odd 1,3,5,7 = p, Rx p, Rz p, Ry p; even 2,4,6,8 likewise from q.
MotionTrajectory dixon2_motion(const Dixon2Params& params, const std::vector<double>& p1_values,
                               int root = 0);
// Restriction to the subgraph left after removing vertices 7 and 8.
MotionTrajectory drop_vertices(const MotionTrajectory& traj, const std::vector<Vertex>& drop);

// Max over samples of |tau sigma rho (x) - x| and of the involution defects on the vertex set.
double dixon2_involution_defect(const MotionTrajectory& k44);

struct CdaParams {
  double a = 0.6;
  double e = 0.75;
};

// a = e / sqrt(e^2 + 1); throws OutOfRange unless e in (-1,1) without 0.
CdaParams cda_params_from_e(double e);
void validate_cda_params(const CdaParams& p);
double cda_relation(double a, double e);
// a^3 e^2 + a^3 - a e^2 in exact rational arithmetic, as (numerator, denominator).
std::pair<long long, long long> cda_relation_exact(long long a_num, long long a_den,
                                                   long long e_num, long long e_den);

struct CdaBranch {
  int s2 = 1;  // sign of y2
  int s5 = 1;  // sign in front of the z5 radical
};

SphericalRealization cda_realization(const CdaParams& p, double t, CdaBranch branch = {});
MotionTrajectory cda_motion(const CdaParams& p, const std::vector<double>& t_values,
                            CdaBranch branch = {});
// The nine target deltas of the motion, keyed by edge.
std::map<VertexPair, double> cda_deltas(const CdaParams& p);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Feasible t found by scanning [-range, range]; endpoints refined by bisection.
std::vector<Interval> cda_feasible_intervals(const CdaParams& p, CdaBranch branch = {},
                                             double range = 50.0, std::size_t grid = 20001);

MotionKind detect_k33_motion_kind(const MotionTrajectory& traj, double tol = 1e-8);

// Per-sample tests used by the detector.
bool is_dixon1_sample(const SphericalRealization& rho, double tol);
bool is_dixon2_sample(const SphericalRealization& rho, double tol);

}  // namespace sphflex

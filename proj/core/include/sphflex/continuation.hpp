#pragma once

#include <set>
#include <vector>

#include <Eigen/Dense>

#include "sphflex/motions.hpp"

namespace sphflex {

// Anchor pinned at (1,0,0); the meridian vertex has coordinate `axis` (1 = y, 2 = z) zero.
struct GaugeFix {
  Vertex anchor = 0;
  Vertex meridian = 0;
  int axis = 2;
};

struct TraceConfig {
  double step_size = 0.02;
  int max_steps = 4000;
  double newton_tol = 1e-11;
  int max_newton_iters = 12;
  double min_step = 1e-7;
};

void validate(const TraceConfig& cfg);

// Anchor = first vertex, meridian = the first other vertex not collinear with it.
GaugeFix default_gauge(const Graph& g, const SphericalRealization& rho);
// Rotation of rho satisfying the gauge; throws DegenerateAxis if the meridian is
// collinear with the anchor.
SphericalRealization regauge(const SphericalRealization& rho, const GaugeFix& gauge);

// Coordinates are x,y,z per vertex in g.vertices() order.
Eigen::VectorXd pack(const Graph& g, const SphericalRealization& rho);
SphericalRealization unpack(const Graph& g, const Eigen::VectorXd& x);

// |V| sphere residuals, |E| edge residuals d - lambda, then 3 gauge residuals.
Eigen::VectorXd residual(const Graph& g, const LengthAssignment& lam, const SphericalRealization& rho,
                         const GaugeFix& gauge);
Eigen::VectorXd residual(const Graph& g, const LengthAssignment& lam, const Eigen::VectorXd& x,
                         const GaugeFix& gauge);
Eigen::MatrixXd jacobian(const Graph& g, const Eigen::VectorXd& x, const GaugeFix& gauge);

// Unknowns minus numerical rank, singular values below 1e-7 * largest counted as zero.
int corank(const Graph& g, const SphericalRealization& rho, const GaugeFix& gauge);

enum class StopReason { max_steps, step_failure, loop_closed, singular_point };

std::string_view to_string(StopReason r);

struct TraceResult {
  MotionTrajectory trajectory;
  std::vector<Eigen::VectorXd> tangents;  // unit tangent at each sample
  StopReason stop = StopReason::max_steps;
  double arclength = 0.0;
};

// Pseudo-arclength predictor-corrector from the gauged seed. A seed off the curve by
// less than 1e-6 is first corrected. Throws SeedNotOnCurve, RankDeficient (corank
// other than 1 at the seed) or StepFailure (no step succeeded).
TraceResult trace(const Graph& g, const LengthAssignment& lam, const SphericalRealization& seed,
                  const GaugeFix& gauge, const TraceConfig& cfg = {});

// Points x on the sphere with <x,n1> = d1 and <x,n2> = d2.
std::vector<Vec3> circle_intersection(const Vec3& n1, double d1, const Vec3& n2, double d2,
                                      double tangency_tol = 1e-12);

// Real placements of free_vertex meeting all edges to placed neighbors.
int fiber_count(const Graph& g, const LengthAssignment& lam, const SphericalRealization& partial,
                Vertex free_vertex);

// Completions of each sample after forgetting the given vertices, maximized over samples.
int empirical_map_degree(const MotionTrajectory& traj, const std::set<Vertex>& forgotten,
                         std::size_t max_samples = 64);

}  // namespace sphflex

#pragma once

#include <string>

#include "sphflex/coloring.hpp"
#include "sphflex/graph.hpp"
#include "sphflex/motions.hpp"
#include "sphflex/spherical.hpp"

namespace sphflex::io {

// Structured text is JSON: {"vertices": [...], "edges": [[a,b], ...]}.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
// One "a b" pair per line; '#' starts a comment.
Graph graph_from_edge_list(const std::string& text);
// Either format, chosen by the first non-blank character.
Graph parse_graph(const std::string& text);

// Graph fields plus "coloring": [[a, b, "red"|"blue"], ...].
std::string coloring_to_text(const EdgeColoring& c);
EdgeColoring coloring_from_text(const std::string& text);

// {"lambda": [[a, b, value], ...]} or the same under "delta".
std::string lengths_to_text(const LengthAssignment& lam);
LengthAssignment lengths_from_text(const std::string& text);

// {"placement": {"1": [x, y, z], ...}}.
std::string realization_to_text(const SphericalRealization& rho);
SphericalRealization realization_from_text(const std::string& text);

std::string trajectory_to_text(const MotionTrajectory& traj);
MotionTrajectory trajectory_from_text(const std::string& text);
// Header "parameter,x1,y1,z1,...,residual"; one row per sample.
std::string trajectory_to_csv(const MotionTrajectory& traj);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sphflex::io

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphflex/cuts.hpp"
#include "sphflex/tables.hpp"

namespace sphflex {

// Quad of K3,3 named by the removed pair (odd k, even l).
using QuadKey = std::pair<Vertex, Vertex>;

// sum coefficient * mu(cut) = rhs over merged normal cuts.
struct PullbackEquation {
  std::vector<std::pair<NormalCut, int>> terms;
  int rhs = 0;
  QuadKey quad{};
  QuadCut divisor = QuadCut::om;

  std::string to_string() const;
};

// Subcases for the quads that need one (deltoids, rhomboids, lozenges); general quads
// may be omitted. Throws InconsistentTypes when a subcase does not fit the table entry
// or the entry is still r/l.
std::vector<PullbackEquation> build_pullback_system(const AdmissibleCase& c,
                                                    const std::map<QuadKey, Subcase>& subcases,
                                                    const std::vector<QuadCut>& divisors);

struct MuSolution {
  bool feasible = false;
  bool unique = false;
  std::map<NormalCut, int> values;  // nonzero entries of the first solution
};

// Exhaustive search over nonnegative integers bounded by the right-hand sides.
MuSolution mu_system_feasible(const std::vector<PullbackEquation>& eqs);

// Case (3) with the three diagonal quads 1234, 1256, 3456 all rhomboids of one type.
std::map<QuadKey, Subcase> case3_rhomboid_subcases(RhomboidType type);
bool is_rhomboid_quad_of_case3(const QuadKey& q);

}  // namespace sphflex

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphflex/coloring.hpp"
#include "sphflex/graph.hpp"

namespace sphflex {

enum class Mark : std::uint8_t { P = 0, Q = 1 };

Mark other(Mark m);

struct MarkedLabel {
  Mark kind = Mark::P;
  Vertex vertex = 0;

  auto operator<=>(const MarkedLabel&) const = default;
};

// Partition (I, J) of the labels P_v, Q_v over a vertex set.
class Cut {
 public:
  // J is the complement of I; throws InvalidCut unless |I|, |J| >= 2.
  static Cut from_side(std::vector<Vertex> vertices, const std::set<MarkedLabel>& side);
  // Reads "P1 Q1 P2 P4 | P3 Q3 Q2 Q4"; the vertex set is taken from the labels.
  static Cut parse(const std::string& text);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<MarkedLabel>& I() const { return i_; }
  const std::set<MarkedLabel>& J() const { return j_; }
  bool in_I(Mark kind, Vertex v) const { return i_.count({kind, v}) != 0; }
  // Number of P_a, Q_a, P_b, Q_b lying in I.
  int count_in_I(Vertex a, Vertex b) const;

  Cut swapped() const;     // I <-> J
  Cut conjugated() const;  // P <-> Q on every label

  // Same unordered partition.
  bool same_partition(const Cut& other) const;
  std::string to_string() const;

 private:
  std::vector<Vertex> vertices_;
  std::set<MarkedLabel> i_;
  std::set<MarkedLabel> j_;
};

bool cut_valid_for_bond(const Graph& g, const Cut& c);
EdgeColoring coloring_from_cut(const Graph& g, const Cut& c);

struct SeparationVerdict {
  bool is_nap = false;
  std::optional<VertexPair> witness;
};

SeparationVerdict nap_iff_separated_nonedge(const Graph& g, const Cut& c);

// Bond-valid cuts with surjective colorings; modulo_symmetry keeps one cut per
// class under I<->J and global P<->Q. Throws BudgetExceeded above 8 vertices.
std::vector<Cut> enumerate_valid_cuts(const Graph& g, bool modulo_symmetry);

// Canonical representative of a cut under I<->J and global P<->Q.
Cut canonical_cut(const Cut& c);

// The four cuts of a 4-cycle with odd vertices o1, o2 and even vertices e1, e2,
// written for the quad 1234 as
//   om = (P1 Q1 P2 Q4 | P3 Q3 Q2 P4), ou = (P1 Q1 P2 P4 | P3 Q3 Q2 Q4),
//   em = (P2 Q2 P1 Q3 | P4 Q4 Q1 P3), eu = (P2 Q2 P1 P3 | P4 Q4 Q1 Q3).
enum class QuadCut { om, ou, em, eu };

std::string_view to_string(QuadCut d);
Cut quad_cut(QuadCut d, Vertex o1, Vertex e1, Vertex o2, Vertex e2);

// (i, T1T2T3) for K3,3: I = {P_i, Q_i, (T_k)_{j_k}} with j1 < j2 < j3 the
// vertices of opposite parity to i.
struct NormalCut {
  Vertex apex = 1;
  std::array<Mark, 3> pattern{Mark::P, Mark::P, Mark::P};

  static NormalCut parse(Vertex apex, const std::string& pattern);

  Cut to_cut() const;
  NormalCut conjugate() const;
  // Representative of {self, conjugate} whose pattern starts with P.
  NormalCut canonical() const;
  std::string to_string() const;

  auto operator<=>(const NormalCut&) const = default;
};

std::array<Vertex, 3> opposite_side(Vertex apex);

// Normal form of a K3,3 cut (after I<->J if needed), if it has that shape.
std::optional<NormalCut> normal_form(const Cut& c);

// The 24 canonical normal cuts: 6 apexes times 4 patterns starting with P.
std::vector<NormalCut> merged_normal_cuts();

}  // namespace sphflex
